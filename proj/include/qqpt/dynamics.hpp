#pragma once
// Lindblad evolution of arbitrary 3x3 matrices under a time-dependent
// Hamiltonian. The generator is linear, so non-Hermitian inputs such as
// |p><q| are propagated directly.

#include <span>
#include <vector>

#include "qqpt/algebra.hpp"
#include "qqpt/hamiltonians.hpp"
#include "qqpt/kernels.hpp"

namespace qqpt {

/// Relaxation and pure dephasing rates in 1/ns.
struct DecoherenceRates {
  double gamma_rel_10 = 0.0;
  double gamma_rel_21 = 0.0;
  double gamma_phi_10 = 0.0;
  double gamma_phi_21 = 0.0;
  double gamma_phi_20 = 0.0;

  /// Symmetric off-diagonal dephasing rate gamma_jk (zero for j == k).
  double dephasing(int j, int k) const;
  bool is_zero() const;
  void validate() const;

  static DecoherenceRates none() { return {}; }
  /// Transmon-typical rate set.
  static DecoherenceRates d1();
  /// Strong-decoherence rate set.
  static DecoherenceRates d2();
  /// Rates quoted in MHz, read as events per microsecond.
  static DecoherenceRates from_mhz(double rel_10, double rel_21, double phi_10, double phi_21, double phi_20);
};

struct TimeGrid {
  double t_start = -182.0;
  double t_end = 140.0;
  int n_steps = 1800;
  // RK4 sub-steps per grid step.
  int substeps = 8;

  double dt() const { return (t_end - t_start) / n_steps; }
  void validate() const;
};

/// dM/dt for the qutrit master equation with M in place of rho.
CMatrix3 lindblad_rhs(const CMatrix3& m, const CMatrix3& h, const DecoherenceRates& rates);

kernels::RateTable rate_table(const DecoherenceRates& rates);

/// Fixed-step RK4 propagation of a batch of matrices sharing one Hamiltonian.
/// Throws NumericalError if any entry becomes non-finite.
std::vector<CMatrix3> propagate_batch(std::span<const CMatrix3> initial, const HamiltonianFn& h,
                                      const DecoherenceRates& rates, const TimeGrid& grid,
                                      kernels::KernelVariant kernel = kernels::KernelVariant::Auto);

CMatrix3 propagate(const CMatrix3& m0, const HamiltonianFn& h, const DecoherenceRates& rates, const TimeGrid& grid,
                   kernels::KernelVariant kernel = kernels::KernelVariant::Auto);

CMatrix3 propagate(const CMatrix3& m0, HamiltonianKind kind, const PulseParams& p, const DecoherenceRates& rates,
                   const TimeGrid& grid);

/// Coherent evolution under h_stirap + h_cd: the ideal counterdiabatic reference.
CMatrix3 propagate_unitary_ideal(const CMatrix3& m0, const PulseParams& p, const TimeGrid& grid);

/// Output for |p><q| assembled from four runs on physical density matrices:
/// |p><q| = |+><+| + i|+i><+i| - (1+i)/2 (|p><p| + |q><q|).
CMatrix3 propagate_via_physical_states(int p, int q, const HamiltonianFn& h, const DecoherenceRates& rates,
                                       const TimeGrid& grid);

}  // namespace qqpt
