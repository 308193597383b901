#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qqpt/hamiltonians.hpp"
#include "test_support.hpp"

using namespace qqpt;

namespace {
const PulseParams kRef{};

PulseParams random_phases(std::mt19937_64& g) {
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> det(-0.05, 0.05);
  PulseParams p = kRef;
  p.phi01 = phase(g);
  p.phi12 = phase(g);
  p.phi02 = phase(g);
  p.delta01 = det(g);
  p.delta12 = det(g);
  return p;
}
}  // namespace

TEST_CASE("STIRAP Hamiltonian on resonance") {
  const CMatrix3 h = h_stirap(0.0, kRef);
  CHECK(h(0, 1) == Complex(kRef.amp01 / 2.0, 0.0));
  CHECK(std::abs(h(1, 2) - envelope12(0.0, kRef) / 2.0) < 1e-16);
  for (int i = 0; i < 3; ++i) CHECK(h(i, i) == Complex(0.0, 0.0));
  CHECK(std::abs(h.trace()) == 0.0);
}

TEST_CASE("STIRAP detuning terms shift levels 1 and 2 by delta01 and delta01 + delta12") {
  PulseParams p = kRef;
  p.delta01 = 0.03;
  p.delta12 = -0.011;
  const CMatrix3 h = h_stirap(1e4, p);  // drives have vanished
  // -(1/2)[d01 L3 + (d01 + 2 d12)/sqrt3 L8 - (2 d01 + d12)/3 I]
  const double e0 = h(0, 0).real();
  CHECK(h(1, 1).real() - e0 == doctest::Approx(p.delta01));
  CHECK(h(2, 2).real() - e0 == doctest::Approx(p.delta01 + p.delta12));
  CHECK(e0 == doctest::Approx(-(2.0 * p.delta01 + p.delta12) / 6.0));
}

TEST_CASE("two-photon and STIRAP Hamiltonians never touch the 0-2 entries") {
  auto& g = testing::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const PulseParams p = random_phases(g);
    const double t = std::uniform_real_distribution<double>(-182.0, 140.0)(g);
    for (const CMatrix3& h : {h_stirap(t, p), h_two_photon(t, p)}) {
      CHECK(h(0, 2) == Complex(0.0, 0.0));
      CHECK(h(2, 0) == Complex(0.0, 0.0));
    }
    CHECK(std::abs(h_cd(t, p)(0, 2)) > 0.0);
  }
}

TEST_CASE("all Hamiltonians are Hermitian") {
  auto& g = testing::rng();
  for (int trial = 0; trial < 100; ++trial) {
    const PulseParams p = random_phases(g);
    const double t = std::uniform_real_distribution<double>(-300.0, 300.0)(g);
    CHECK(hermiticity_residual(h_stirap(t, p)) <= 1e-14);
    CHECK(hermiticity_residual(h_cd(t, p)) <= 1e-14);
    CHECK(hermiticity_residual(h_two_photon(t, p)) <= 1e-14);
    CHECK(hermiticity_residual(h_sastirap(t, p)) <= 1e-14);
  }
}

TEST_CASE("counterdiabatic term") {
  // phi02 = pi/2: pure Lambda_5 generator
  const double t = kRef.t_sep / 2.0;
  const CMatrix3 h = h_cd(t, kRef);
  CHECK(max_abs(h - (-0.5 * omega02(t, kRef)) * gell_mann(5)) < 1e-17);
  CHECK(std::abs(h(0, 2)) == doctest::Approx(0.011428571428571429).epsilon(1e-13));
  CHECK(max_abs(h_cd(1e5, kRef)) == 0.0);
  CHECK(max_abs(h_cd(1e4, kRef)) < 1e-90);
}

TEST_CASE("two-photon drive amplitude and phase") {
  const double t = kRef.t_sep / 2.0;
  const CMatrix3 h = h_two_photon(t, kRef);
  // mpmath: sqrt(sqrt2 * Delta * Omega02_peak)
  const double amp = 0.21377143052047850;
  // |H_01| = amp/2, |H_12| = amp/sqrt2
  CHECK(std::abs(h(0, 1)) == doctest::Approx(amp / 2.0).epsilon(1e-12));
  CHECK(std::abs(h(1, 2)) == doctest::Approx(amp / std::sqrt(2.0)).epsilon(1e-12));
  // (1/2) amp [cos(x) L1 - sin(x) L2] has (0,1) entry (amp/2) e^{+ix}, x = phi_2ph - Delta t
  const double x = -std::numbers::pi / 4.0 - kRef.big_delta * t;
  CHECK(std::abs(h(0, 1) - amp / 2.0 * std::polar(1.0, x)) < 1e-12);
}

TEST_CASE("two-photon preconditions") {
  PulseParams p = kRef;
  p.big_delta = 0.0;
  CHECK_THROWS_AS(h_two_photon(0.0, p), std::invalid_argument);
  p = kRef;
  p.t_sep = +28.0;  // intuitive order: Theta decreases, Omega02 < 0
  CHECK_THROWS_AS(h_two_photon(0.0, p), std::domain_error);
}

TEST_CASE("saSTIRAP is the sum of its parts and decays away from the pulses") {
  for (double t : {-100.0, 0.0, 35.0}) CHECK(max_abs(h_sastirap(t, kRef) - h_stirap(t, kRef) - h_two_photon(t, kRef)) <= 1e-15);
  CHECK(max_abs(h_sastirap(5000.0, kRef)) < 1e-20);
  CHECK(max_abs(h_sastirap(-5000.0, kRef)) < 1e-20);
  const CMatrix3 h0 = h_sastirap(0.0, kRef);
  CHECK(std::abs(h0(0, 1) - (kRef.amp01 / 2.0 + h_two_photon(0.0, kRef)(0, 1))) < 1e-16);
}

TEST_CASE("dispatch by kind") {
  CHECK(max_abs(hamiltonian(HamiltonianKind::Identity, 3.0, kRef)) == 0.0);
  CHECK(max_abs(hamiltonian(HamiltonianKind::Stirap, 3.0, kRef) - h_stirap(3.0, kRef)) == 0.0);
  CHECK(max_abs(make_hamiltonian(HamiltonianKind::TwoPhoton, kRef)(3.0) - h_two_photon(3.0, kRef)) == 0.0);
  for (auto k : {HamiltonianKind::Stirap, HamiltonianKind::SaStirap, HamiltonianKind::TwoPhoton, HamiltonianKind::Identity}) {
    CHECK(parse_hamiltonian_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_hamiltonian_kind("rabi").has_value());
}
