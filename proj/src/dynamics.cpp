#include "qqpt/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qqpt {

double DecoherenceRates::dephasing(int j, int k) const {
  if (j == k) return 0.0;
  const int lo = std::min(j, k);
  const int hi = std::max(j, k);
  if (lo == 0 && hi == 1) return gamma_rel_10 / 2.0 + gamma_phi_10;
  if (lo == 0 && hi == 2) return gamma_rel_21 / 2.0 + gamma_phi_20;
  return (gamma_rel_10 + gamma_rel_21) / 2.0 + gamma_phi_21;
}

bool DecoherenceRates::is_zero() const {
  return gamma_rel_10 == 0.0 && gamma_rel_21 == 0.0 && gamma_phi_10 == 0.0 && gamma_phi_21 == 0.0 &&
         gamma_phi_20 == 0.0;
}

void DecoherenceRates::validate() const {
  for (double r : {gamma_rel_10, gamma_rel_21, gamma_phi_10, gamma_phi_21, gamma_phi_20}) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("DecoherenceRates: rates must be finite and >= 0");
  }
}

DecoherenceRates DecoherenceRates::from_mhz(double rel_10, double rel_21, double phi_10, double phi_21,
                                            double phi_20) {
  constexpr double kPerMicrosecondToPerNs = 1e-3;
  return {rel_10 * kPerMicrosecondToPerNs, rel_21 * kPerMicrosecondToPerNs, phi_10 * kPerMicrosecondToPerNs,
          phi_21 * kPerMicrosecondToPerNs, phi_20 * kPerMicrosecondToPerNs};
}

DecoherenceRates DecoherenceRates::d1() { return from_mhz(0.5, 0.71, 0.4, 0.56, 0.96); }

DecoherenceRates DecoherenceRates::d2() { return from_mhz(2.5, 3.55, 2.0, 2.80, 4.8); }

void TimeGrid::validate() const {
  if (!(t_end > t_start)) throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
  if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
  if (substeps < 1) throw std::invalid_argument("TimeGrid: substeps must be >= 1");
}

CMatrix3 lindblad_rhs(const CMatrix3& m, const CMatrix3& h, const DecoherenceRates& rates) {
  const Complex minus_i{0.0, -1.0};
  CMatrix3 out = minus_i * (h * m - m * h);
  out(1, 1) += rates.gamma_rel_21 * m(2, 2);
  out(2, 2) -= rates.gamma_rel_21 * m(2, 2);
  out(0, 0) += rates.gamma_rel_10 * m(1, 1);
  out(1, 1) -= rates.gamma_rel_10 * m(1, 1);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      if (j != k) out(j, k) -= rates.dephasing(j, k) * m(j, k);
  return out;
}

kernels::RateTable rate_table(const DecoherenceRates& rates) {
  kernels::RateTable table;
  table.relax_10 = rates.gamma_rel_10;
  table.relax_21 = rates.gamma_rel_21;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) table.dephase[3 * j + k] = rates.dephasing(j, k);
  return table;
}

namespace {

void load_stage(kernels::StageHamiltonians& stages, int slot, const CMatrix3& h) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      stages.re[slot][3 * a + b] = h(a, b).real();
      stages.im[slot][3 * a + b] = h(a, b).imag();
    }
}

}  // namespace

std::vector<CMatrix3> propagate_batch(std::span<const CMatrix3> initial, const HamiltonianFn& h,
                                      const DecoherenceRates& rates, const TimeGrid& grid,
                                      kernels::KernelVariant kernel) {
  grid.validate();
  rates.validate();
  const kernels::Rk4StepFn step = kernels::rk4_step_kernel(kernel);
  const kernels::RateTable table = rate_table(rates);

  kernels::BatchState state(initial.size());
  for (std::size_t l = 0; l < initial.size(); ++l)
    for (int e = 0; e < 9; ++e) {
      state.re_at(e, l) = initial[l](e / 3, e % 3).real();
      state.im_at(e, l) = initial[l](e / 3, e % 3).imag();
    }

  const double dt = grid.dt();
  const double h_sub = dt / grid.substeps;
  kernels::StageHamiltonians stages;
  for (int n = 0; n < grid.n_steps; ++n) {
    const double t_n = grid.t_start + n * dt;
    for (int s = 0; s < grid.substeps; ++s) {
      const double tau = t_n + s * h_sub;
      load_stage(stages, 0, h(tau));
      load_stage(stages, 1, h(tau + 0.5 * h_sub));
      load_stage(stages, 2, h(tau + h_sub));
      step(state, stages, table, h_sub);
    }
  }

  std::vector<CMatrix3> out(initial.size());
  for (std::size_t l = 0; l < initial.size(); ++l) {
    for (int e = 0; e < 9; ++e) out[l](e / 3, e % 3) = Complex{state.re_at(e, l), state.im_at(e, l)};
    if (!out[l].allFinite()) throw NumericalError("propagate: non-finite state (step size too large?)");
  }
  return out;
}

CMatrix3 propagate(const CMatrix3& m0, const HamiltonianFn& h, const DecoherenceRates& rates, const TimeGrid& grid,
                   kernels::KernelVariant kernel) {
  return propagate_batch(std::span<const CMatrix3>(&m0, 1), h, rates, grid, kernel).front();
}

CMatrix3 propagate(const CMatrix3& m0, HamiltonianKind kind, const PulseParams& p, const DecoherenceRates& rates,
                   const TimeGrid& grid) {
  return propagate(m0, make_hamiltonian(kind, p), rates, grid);
}

CMatrix3 propagate_unitary_ideal(const CMatrix3& m0, const PulseParams& p, const TimeGrid& grid) {
  const HamiltonianFn h = [p](double t) -> CMatrix3 { return h_stirap(t, p) + h_cd(t, p); };
  return propagate(m0, h, DecoherenceRates::none(), grid);
}

CMatrix3 propagate_via_physical_states(int p, int q, const HamiltonianFn& h, const DecoherenceRates& rates,
                                       const TimeGrid& grid) {
  if (p == q) return propagate(ket_bra(p, p), h, rates, grid);
  Eigen::Vector3cd ket_p = Eigen::Vector3cd::Unit(p);
  Eigen::Vector3cd ket_q = Eigen::Vector3cd::Unit(q);
  const Complex i{0.0, 1.0};
  const Eigen::Vector3cd plus = (ket_p + ket_q) / std::sqrt(2.0);
  const Eigen::Vector3cd plus_i = (ket_p + i * ket_q) / std::sqrt(2.0);
  const std::vector<CMatrix3> inputs{plus * plus.adjoint(), plus_i * plus_i.adjoint(), ket_bra(p, p), ket_bra(q, q)};
  const std::vector<CMatrix3> out = propagate_batch(inputs, h, rates, grid);
  return out[0] + i * out[1] - (1.0 + i) / 2.0 * (out[2] + out[3]);
}

}  // namespace qqpt
