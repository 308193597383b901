#include "qqpt/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace qqpt {

std::string_view to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Stirap: return "stirap";
    case HamiltonianKind::SaStirap: return "sastirap";
    case HamiltonianKind::TwoPhoton: return "twophoton";
    case HamiltonianKind::Identity: return "identity";
  }
  return "unknown";
}

std::optional<HamiltonianKind> parse_hamiltonian_kind(std::string_view name) {
  if (name == "stirap") return HamiltonianKind::Stirap;
  if (name == "sastirap") return HamiltonianKind::SaStirap;
  if (name == "twophoton") return HamiltonianKind::TwoPhoton;
  if (name == "identity") return HamiltonianKind::Identity;
  return std::nullopt;
}

CMatrix3 h_stirap(double t, const PulseParams& p) {
  const OperatorBasis& e = operator_basis();
  const double o01 = envelope01(t, p);
  const double o12 = envelope12(t, p);
  CMatrix3 h = 0.5 * o01 * (std::cos(p.phi01) * e[1] + std::sin(p.phi01) * e[2]) +
               0.5 * o12 * (std::cos(p.phi12) * e[6] + std::sin(p.phi12) * e[7]);
  if (p.delta01 != 0.0 || p.delta12 != 0.0) {
    h -= 0.5 * (p.delta01 * e[3] + (p.delta01 + 2.0 * p.delta12) / std::sqrt(3.0) * e[8] -
                (2.0 * p.delta01 + p.delta12) / 3.0 * e[0]);
  }
  return h;
}

CMatrix3 h_cd(double t, const PulseParams& p) {
  const OperatorBasis& e = operator_basis();
  return -0.5 * omega02(t, p) * (std::cos(p.phi02) * e[4] + std::sin(p.phi02) * e[5]);
}

CMatrix3 h_two_photon(double t, const PulseParams& p) {
  if (!(p.big_delta > 0.0)) throw std::invalid_argument("h_two_photon: big_delta must be positive");
  const double arg = std::sqrt(2.0) * p.big_delta * omega02(t, p);
  if (arg < 0.0) throw std::domain_error("h_two_photon: sqrt(2) * big_delta * Omega02 is negative");
  const double amp = std::sqrt(arg);
  const double phase = p.phi_two_photon();
  const double lower = phase - p.big_delta * t;
  const double upper = phase + p.big_delta * t;
  const OperatorBasis& e = operator_basis();
  return 0.5 * amp * (std::cos(lower) * e[1] - std::sin(lower) * e[2]) +
         amp / std::sqrt(2.0) * (std::cos(upper) * e[6] - std::sin(upper) * e[7]);
}

CMatrix3 h_sastirap(double t, const PulseParams& p) { return h_stirap(t, p) + h_two_photon(t, p); }

CMatrix3 hamiltonian(HamiltonianKind kind, double t, const PulseParams& p) {
  switch (kind) {
    case HamiltonianKind::Stirap: return h_stirap(t, p);
    case HamiltonianKind::SaStirap: return h_sastirap(t, p);
    case HamiltonianKind::TwoPhoton: return h_two_photon(t, p);
    case HamiltonianKind::Identity: return CMatrix3::Zero();
  }
  throw std::invalid_argument("hamiltonian: unknown kind");
}

HamiltonianFn make_hamiltonian(HamiltonianKind kind, const PulseParams& p) {
  return [kind, p](double t) { return hamiltonian(kind, t, p); };
}

}  // namespace qqpt
