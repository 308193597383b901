#pragma once
// Gaussian drive envelopes and the mixing-angle geometry of the
// counter-intuitive pulse pair. Frequencies are angular, in rad/ns; times in ns.

#include <numbers>

namespace qqpt {

/// 2*pi * 1e-3: converts a frequency in MHz to rad/ns.
inline constexpr double kMHzToRadPerNs = 2.0 * std::numbers::pi * 1e-3;
/// 2*pi: converts a frequency in GHz to rad/ns.
inline constexpr double kGHzToRadPerNs = 2.0 * std::numbers::pi;

struct PulseParams {
  double amp01 = 45.0 * kMHzToRadPerNs;
  double amp12 = 45.0 * kMHzToRadPerNs;
  double sigma = 35.0;
  double t_sep = -0.8 * 35.0;
  double phi01 = 0.0;
  double phi12 = 0.0;
  // Counterdiabatic condition phi01 + phi12 - phi02 = -pi/2.
  double phi02 = std::numbers::pi / 2.0;
  double delta01 = 0.0;
  double delta12 = 0.0;
  // Half the difference of the 0-1 and 1-2 transition frequencies.
  double big_delta = (5.27 - 4.82) / 2.0 * kGHzToRadPerNs;

  /// phi20 = -phi02
  double phi20() const { return -phi02; }
  /// Two-photon drive phase -(phi20 + pi)/2.
  double phi_two_photon() const { return -(phi20() + std::numbers::pi) / 2.0; }
  /// phi02 satisfying the counterdiabatic condition for the current phi01, phi12.
  double counterdiabatic_phi02() const { return phi01 + phi12 + std::numbers::pi / 2.0; }

  /// Throws std::invalid_argument on sigma <= 0 or negative amplitudes.
  void validate() const;
};

double envelope01(double t, const PulseParams& p);
double envelope12(double t, const PulseParams& p);

/// Theta = atan(Omega01(t) / Omega12(t)).
double mixing_angle(double t, const PulseParams& p);

/// dTheta/dt. Closed form when the two amplitudes agree to 1e-12, otherwise
/// a five-point central difference of mixing_angle.
double theta_dot(double t, const PulseParams& p);

/// Counterdiabatic Rabi rate 2 * dTheta/dt.
double omega02(double t, const PulseParams& p);

}  // namespace qqpt
