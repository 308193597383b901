#pragma once
// Rotating-frame qutrit Hamiltonians (hbar = 1, rad/ns).

#include <functional>
#include <optional>
#include <string_view>

#include "qqpt/algebra.hpp"
#include "qqpt/pulses.hpp"

namespace qqpt {

enum class HamiltonianKind { Stirap, SaStirap, TwoPhoton, Identity };

std::string_view to_string(HamiltonianKind kind);
std::optional<HamiltonianKind> parse_hamiltonian_kind(std::string_view name);

/// Counter-intuitive STIRAP drive on 0-1 and 1-2 with optional detunings.
CMatrix3 h_stirap(double t, const PulseParams& p);

/// Direct 0-2 counterdiabatic coupling -(1/2) Omega02(t) [cos phi02 L4 + sin phi02 L5].
CMatrix3 h_cd(double t, const PulseParams& p);

/// Two-photon realization of the counterdiabatic term. Requires big_delta > 0;
/// throws std::domain_error if sqrt(2) * big_delta * Omega02(t) < 0.
CMatrix3 h_two_photon(double t, const PulseParams& p);

/// h_stirap + h_two_photon.
CMatrix3 h_sastirap(double t, const PulseParams& p);

/// Dispatch on kind; Identity yields the zero Hamiltonian.
CMatrix3 hamiltonian(HamiltonianKind kind, double t, const PulseParams& p);

using HamiltonianFn = std::function<CMatrix3(double)>;

HamiltonianFn make_hamiltonian(HamiltonianKind kind, const PulseParams& p);

}  // namespace qqpt
