#include "qqpt/experiment/runner.hpp"

#include <chrono>
#include <future>

#include "qqpt/dynamics.hpp"
#include "qqpt/metrics.hpp"

namespace qqpt::experiment {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<CMatrix3> simulate_basis_outputs(const ExperimentConfig& cfg, kernels::KernelVariant kernel) {
  const StateBasis& states = state_basis();
  const std::vector<CMatrix3> inputs(states.elements.begin(), states.elements.end());
  return propagate_batch(inputs, make_hamiltonian(cfg.process, cfg.pulse), cfg.rates, cfg.grid, kernel);
}

SimulationResult run_simulation(const ExperimentConfig& cfg, kernels::KernelVariant kernel) {
  const auto start = std::chrono::steady_clock::now();
  SimulationResult out;
  out.config = cfg;
  if (cfg.all_basis_inputs) {
    out.basis_outputs = simulate_basis_outputs(cfg, kernel);
    out.final_state = out.basis_outputs.front();
  } else {
    out.final_state = propagate(ket_bra(0, 0), make_hamiltonian(cfg.process, cfg.pulse), cfg.rates, cfg.grid, kernel);
  }
  out.transfer_fidelity = transfer_fidelity(out.final_state);
  out.wall_time_s = seconds_since(start);
  return out;
}

QptResult run_qpt(const ExperimentConfig& cfg, kernels::KernelVariant kernel) {
  const auto start = std::chrono::steady_clock::now();
  QptResult out;
  out.config = cfg;
  out.basis_outputs = simulate_basis_outputs(cfg, kernel);
  const BetaMatrix& beta = standard_beta();
  out.beta_condition = beta.condition;
  out.chi = reconstruct_chi(beta, lambda_from_outputs(out.basis_outputs, state_basis()));
  out.validation = validate_chi(out.chi, operator_basis());
  // basis input 0 is |0><0|
  out.transfer_fidelity = transfer_fidelity(out.basis_outputs.front());
  out.wall_time_s = seconds_since(start);
  return out;
}

Table1Row table1_reference(HamiltonianKind process) {
  switch (process) {
    case HamiltonianKind::Stirap: return {process, 0.76, 0.31, 0.25, 0.74, 0.916, 0.796, 0.464};
    case HamiltonianKind::SaStirap: return {process, 0.78, 0.33, 0.24, 0.72, 0.999, 0.861, 0.487};
    case HamiltonianKind::TwoPhoton: return {process, 0.78, 0.33, 0.24, 0.72, 0.888, 0.770, 0.446};
    case HamiltonianKind::Identity: break;
  }
  return {process};
}

Table1 run_table1(const ExperimentConfig& base, kernels::KernelVariant kernel) {
  // Resolve once so every worker uses the same variant.
  kernel = kernels::resolve_kernel(kernel);
  std::array<std::array<std::future<QptResult>, 3>, 3> pending;
  for (std::size_t i = 0; i < kTableProcesses.size(); ++i) {
    for (std::size_t d = 0; d < kTableDecoherence.size(); ++d) {
      ExperimentConfig cfg = base;
      cfg.process = kTableProcesses[i];
      set_decoherence_preset(cfg, kTableDecoherence[d]);
      pending[i][d] = std::async(std::launch::async, [cfg, kernel] { return run_qpt(cfg, kernel); });
    }
  }

  Table1 table;
  for (std::size_t i = 0; i < kTableProcesses.size(); ++i) {
    for (std::size_t d = 0; d < kTableDecoherence.size(); ++d) table.runs[i][d] = pending[i][d].get();
    const auto& r = table.runs[i];
    Table1Row& row = table.rows[i];
    row.process = kTableProcesses[i];
    row.fidelity_0_d1 = process_fidelity(r[0].chi, r[1].chi);
    row.fidelity_0_d2 = process_fidelity(r[0].chi, r[2].chi);
    row.distance_0_d1 = process_distance(r[0].chi, r[1].chi);
    row.distance_0_d2 = process_distance(r[0].chi, r[2].chi);
    row.state_f0 = r[0].transfer_fidelity;
    row.state_fd1 = r[1].transfer_fidelity;
    row.state_fd2 = r[2].transfer_fidelity;
  }
  return table;
}

}  // namespace qqpt::experiment
