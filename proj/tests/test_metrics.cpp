#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qqpt/metrics.hpp"
#include "test_support.hpp"

using namespace qqpt;

namespace {

ProcessMatrix random_chi(int rank) {
  ProcessMatrix p;
  p.chi = testing::random_psd(9, rank);
  return p;
}

}  // namespace

TEST_CASE("fidelity of a matrix with itself is one") {
  for (int rank : {1, 3, 9}) {
    const ProcessMatrix chi = random_chi(rank);
    CHECK(process_fidelity(chi, chi) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(process_distance(chi, chi) == doctest::Approx(0.0));
  }
}

TEST_CASE("normalization makes the metrics scale invariant") {
  const ProcessMatrix a = random_chi(9);
  ProcessMatrix scaled = a;
  scaled.chi *= 13.0 / 9.0;
  CHECK(process_fidelity(a, scaled) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(process_distance(a, scaled) <= 1e-12);
}

TEST_CASE("fidelity is bounded and symmetric") {
  for (int trial = 0; trial < 30; ++trial) {
    const ProcessMatrix a = random_chi(1 + trial % 9);
    const ProcessMatrix b = random_chi(1 + (trial * 7) % 9);
    const double fab = process_fidelity(a, b);
    CHECK(fab >= 0.0);
    CHECK(fab <= 1.0 + 1e-9);
    CHECK(fab < 1.0 - 1e-6);
    CHECK(fab == doctest::Approx(process_fidelity(b, a)).epsilon(1e-9));
  }
}

TEST_CASE("commuting inputs reduce to the classical fidelity of spectra") {
  auto& g = testing::rng();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd a(9), b(9);
    for (int i = 0; i < 9; ++i) {
      a(i) = u(g);
      b(i) = u(g);
    }
    if (trial % 4 == 0) a(trial % 9) = 0.0;  // include rank deficiency
    a /= a.sum();
    b /= b.sum();
    ProcessMatrix pa, pb;
    pa.chi = a.cast<Complex>().asDiagonal();
    pb.chi = b.cast<Complex>().asDiagonal();
    double bhatt = 0.0;
    for (int i = 0; i < 9; ++i) bhatt += std::sqrt(a(i) * b(i));
    CHECK(process_fidelity(pa, pb) == doctest::Approx(bhatt * bhatt).epsilon(1e-12));
  }
}

TEST_CASE("pure inputs reduce to the squared overlap") {
  for (int trial = 0; trial < 10; ++trial) {
    const CVectorN x = testing::random_matrix(9).col(0).normalized();
    const CVectorN y = testing::random_matrix(9).col(0).normalized();
    ProcessMatrix a{x * x.adjoint()};
    ProcessMatrix b{y * y.adjoint()};
    CHECK(process_fidelity(a, b) == doctest::Approx(std::norm(x.dot(y))).epsilon(1e-7));
  }
}

TEST_CASE("distance is a metric") {
  for (int trial = 0; trial < 30; ++trial) {
    const ProcessMatrix a = random_chi(9), b = random_chi(2), c = random_chi(5);
    const double ab = process_distance(a, b);
    const double bc = process_distance(b, c);
    const double ac = process_distance(a, c);
    CHECK(ac <= ab + bc + 1e-9);
    CHECK(ab == doctest::Approx(process_distance(b, a)));
    CHECK(ab > 0.0);
  }
  // explicit value: diag(1, 0) vs diag(0, 1) in the 9-dim space
  ProcessMatrix e0, e1;
  e0.chi(0, 0) = 1.0;
  e1.chi(1, 1) = 1.0;
  CHECK(process_distance(e0, e1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(process_fidelity(e0, e1) == doctest::Approx(0.0));
}

TEST_CASE("process metrics reject non-PSD or traceless input") {
  ProcessMatrix bad;
  bad.chi(0, 0) = 1.0;
  bad.chi(1, 1) = -0.3;
  CHECK_THROWS_AS(process_fidelity(bad, random_chi(9)), NumericalError);
  ProcessMatrix zero;
  CHECK_THROWS_AS(process_distance(zero, random_chi(9)), NumericalError);
}

TEST_CASE("transfer fidelity") {
  CHECK(transfer_fidelity(ket_bra(2, 2)) == 1.0);
  CHECK(transfer_fidelity(ket_bra(0, 0)) == 0.0);
  CMatrix3 m = ket_bra(2, 2);
  m(2, 2) = Complex{0.5, 1e-6};
  CHECK_THROWS_AS(transfer_fidelity(m), std::invalid_argument);
}
