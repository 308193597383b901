#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qqpt/pulses.hpp"

using namespace qqpt;
using std::numbers::pi;

namespace {
// Reference experiment: sigma = 35 ns, t_s = -0.8 sigma, 45 MHz drives.
const PulseParams kRef{};
}  // namespace

TEST_CASE("envelopes") {
  CHECK(envelope01(0.0, kRef) == kRef.amp01);
  CHECK(envelope01(kRef.sigma, kRef) == doctest::Approx(kRef.amp01 * std::exp(-0.5)).epsilon(1e-15));
  // 45 MHz in angular units
  CHECK(envelope01(0.0, kRef) == doctest::Approx(0.28274333882308139).epsilon(1e-15));

  CHECK(kRef.t_sep == doctest::Approx(-28.0));
  CHECK(envelope12(-28.0, kRef) == kRef.amp12);
  CHECK(envelope12(kRef.t_sep + kRef.sigma, kRef) == doctest::Approx(kRef.amp12 * std::exp(-0.5)).epsilon(1e-15));
  CHECK(envelope12(-28.0 + 1.0, kRef) < envelope12(-28.0, kRef));
  CHECK(envelope12(-28.0 - 1.0, kRef) < envelope12(-28.0, kRef));
}

TEST_CASE("mixing angle") {
  CHECK(mixing_angle(kRef.t_sep / 2.0, kRef) == doctest::Approx(pi / 4.0).epsilon(1e-15));
  // mpmath: atan(Omega01(-182)/Omega12(-182)) from the Gaussians directly
  CHECK(mixing_angle(-182.0, kRef) == doctest::Approx(0.021490292427455023).epsilon(1e-12));
  CHECK(mixing_angle(1e4, kRef) == doctest::Approx(pi / 2.0));
  CHECK(mixing_angle(-1e4, kRef) == doctest::Approx(0.0));

  // independent route: ratio of the envelope functions
  for (double t = -150.0; t <= 120.0; t += 17.0) {
    CHECK(mixing_angle(t, kRef) == doctest::Approx(std::atan(envelope01(t, kRef) / envelope12(t, kRef))).epsilon(1e-13));
  }

  double prev = mixing_angle(-182.0, kRef);
  for (double t = -181.0; t <= 140.0; t += 1.0) {
    const double now = mixing_angle(t, kRef);
    CHECK(now > prev);
    prev = now;
  }
}

TEST_CASE("theta_dot closed form") {
  CHECK(theta_dot(kRef.t_sep / 2.0, kRef) == doctest::Approx(28.0 / 2450.0).epsilon(1e-14));
  // mpmath derivative of the mixing angle at t = -182 ns
  CHECK(theta_dot(-182.0, kRef) == doctest::Approx(4.9105546116223155e-4).epsilon(1e-12));
  CHECK(theta_dot(1e5, kRef) == 0.0);
  CHECK(theta_dot(-1e5, kRef) == 0.0);
  for (double x : {1.0, 10.0, 55.5, 200.0}) {
    CHECK(theta_dot(kRef.t_sep / 2.0 + x, kRef) == doctest::Approx(theta_dot(kRef.t_sep / 2.0 - x, kRef)).epsilon(1e-12));
  }
}

TEST_CASE("theta_dot equals the finite difference of the mixing angle") {
  const double h = 1e-4;
  double worst = 0.0;
  for (double t = -182.0; t <= 140.0; t += 0.5) {
    const double fd = (mixing_angle(t + h, kRef) - mixing_angle(t - h, kRef)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - theta_dot(t, kRef)));
  }
  CHECK(worst <= 1e-7);
}

TEST_CASE("theta_dot integrates to pi/2") {
  // composite Simpson on [-2000, 2000] ns
  const int n = 40000;
  const double a = -2000.0;
  const double b = 2000.0;
  const double h = (b - a) / n;
  double sum = theta_dot(a, kRef) + theta_dot(b, kRef);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * theta_dot(a + i * h, kRef);
  CHECK(sum * h / 3.0 == doctest::Approx(pi / 2.0).epsilon(1e-6));
}

TEST_CASE("theta_dot falls back to numerical differentiation for unequal amplitudes") {
  PulseParams p = kRef;
  p.amp12 = 0.7 * p.amp01;
  const double h = 1e-4;
  for (double t : {-100.0, -14.0, 0.0, 60.0}) {
    const double fd = (mixing_angle(t + h, p) - mixing_angle(t - h, p)) / (2.0 * h);
    CHECK(theta_dot(t, p) == doctest::Approx(fd).epsilon(1e-7));
  }
  // the unequal-amplitude derivative is not the equal-amplitude closed form
  CHECK(std::abs(theta_dot(-14.0, p) - theta_dot(-14.0, kRef)) > 1e-4);
}

TEST_CASE("omega02") {
  CHECK(omega02(-14.0, kRef) == doctest::Approx(28.0 / 1225.0).epsilon(1e-14));
  CHECK(omega02(-14.0, kRef) / (2.0 * pi) * 1e3 == doctest::Approx(3.638).epsilon(1e-3));  // MHz
  CHECK(omega02(-182.0, kRef) == doctest::Approx(9.8211092232446311e-4).epsilon(1e-12));
  for (double t = -100.0; t <= 100.0; t += 7.0) CHECK(omega02(t, kRef) <= omega02(-14.0, kRef));

  PulseParams wide = kRef;
  wide.sigma = 2.0 * kRef.sigma;
  wide.t_sep = -0.8 * wide.sigma;
  CHECK(omega02(wide.t_sep / 2.0, wide) == doctest::Approx(omega02(kRef.t_sep / 2.0, kRef) / 2.0).epsilon(1e-14));
}

TEST_CASE("pulse parameter validation and phase bookkeeping") {
  CHECK_NOTHROW(kRef.validate());
  PulseParams bad = kRef;
  bad.sigma = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = kRef;
  bad.amp01 = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CHECK(kRef.phi01 + kRef.phi12 + kRef.phi20() == doctest::Approx(-pi / 2.0));
  CHECK(kRef.phi20() == doctest::Approx(-pi / 2.0));
  CHECK(kRef.phi_two_photon() == doctest::Approx(-pi / 4.0));
  CHECK(kRef.big_delta == doctest::Approx(2.0 * pi * 0.225).epsilon(1e-14));
}
