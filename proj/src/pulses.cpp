#include "qqpt/pulses.hpp"

#include <cmath>
#include <stdexcept>

namespace qqpt {

void PulseParams::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("PulseParams: sigma must be positive");
  if (amp01 < 0.0 || amp12 < 0.0) throw std::invalid_argument("PulseParams: amplitudes must be non-negative");
}

double envelope01(double t, const PulseParams& p) {
  return p.amp01 * std::exp(-t * t / (2.0 * p.sigma * p.sigma));
}

double envelope12(double t, const PulseParams& p) {
  const double x = t - p.t_sep;
  return p.amp12 * std::exp(-x * x / (2.0 * p.sigma * p.sigma));
}

double mixing_angle(double t, const PulseParams& p) {
  // Envelope ratio taken in log space so the tails don't underflow to 0/0.
  const double s2 = 2.0 * p.sigma * p.sigma;
  const double log_ratio = std::log(p.amp01) - std::log(p.amp12) - p.t_sep * (2.0 * t - p.t_sep) / s2;
  if (log_ratio > 700.0) return std::numbers::pi / 2.0;
  return std::atan(std::exp(log_ratio));
}

double theta_dot(double t, const PulseParams& p) {
  if (std::abs(p.amp01 - p.amp12) <= 1e-12) {
    const double s2 = p.sigma * p.sigma;
    const double u = -p.t_sep * (2.0 * t - p.t_sep) / (2.0 * s2);
    if (std::abs(u) > 700.0) return 0.0;
    return -p.t_sep / (2.0 * s2 * std::cosh(u));
  }
  const double h = 1e-3 * p.sigma;
  return (-mixing_angle(t + 2 * h, p) + 8 * mixing_angle(t + h, p) - 8 * mixing_angle(t - h, p) +
          mixing_angle(t - 2 * h, p)) /
         (12.0 * h);
}

double omega02(double t, const PulseParams& p) { return 2.0 * theta_dot(t, p); }

}  // namespace qqpt
