#pragma once
// Experiment drivers behind the command-line subcommands.

#include <array>
#include <vector>

#include "qqpt/experiment/config.hpp"
#include "qqpt/kernels.hpp"
#include "qqpt/qpt.hpp"

namespace qqpt::experiment {

struct SimulationResult {
  ExperimentConfig config;
  CMatrix3 final_state;                  // from |0><0|
  double transfer_fidelity = 0.0;
  std::vector<CMatrix3> basis_outputs;   // all nine |p><q| when requested
  double wall_time_s = 0.0;
};

struct QptResult {
  ExperimentConfig config;
  ProcessMatrix chi;
  ValidationReport validation;
  double beta_condition = 0.0;
  std::vector<CMatrix3> basis_outputs;   // eps(|p><q|), index 3p + q
  double transfer_fidelity = 0.0;        // <2|eps(|0><0|)|2>
  double wall_time_s = 0.0;
};

/// Propagates the nine basis inputs of a config in one batch.
std::vector<CMatrix3> simulate_basis_outputs(const ExperimentConfig& cfg,
                                             kernels::KernelVariant kernel = kernels::KernelVariant::Auto);

SimulationResult run_simulation(const ExperimentConfig& cfg,
                                kernels::KernelVariant kernel = kernels::KernelVariant::Auto);
QptResult run_qpt(const ExperimentConfig& cfg, kernels::KernelVariant kernel = kernels::KernelVariant::Auto);

struct Table1Row {
  HamiltonianKind process = HamiltonianKind::Stirap;
  double fidelity_0_d1 = 0.0;
  double fidelity_0_d2 = 0.0;
  double distance_0_d1 = 0.0;
  double distance_0_d2 = 0.0;
  double state_f0 = 0.0;
  double state_fd1 = 0.0;
  double state_fd2 = 0.0;

  std::array<double, 7> values() const {
    return {fidelity_0_d1, fidelity_0_d2, distance_0_d1, distance_0_d2, state_f0, state_fd1, state_fd2};
  }
};

inline constexpr std::array<HamiltonianKind, 3> kTableProcesses{HamiltonianKind::Stirap, HamiltonianKind::SaStirap,
                                                                HamiltonianKind::TwoPhoton};
inline constexpr std::array<const char*, 3> kTableDecoherence{"none", "d1", "d2"};
inline constexpr std::array<const char*, 7> kTableColumns{"F(0,d1)", "F(0,d2)", "D(0,d1)", "D(0,d2)", "F0", "Fd1", "Fd2"};

/// Reference values for one process row.
Table1Row table1_reference(HamiltonianKind process);

struct Table1 {
  std::array<Table1Row, 3> rows;
  // runs[process][decoherence], ordered as kTableProcesses x kTableDecoherence
  std::array<std::array<QptResult, 3>, 3> runs;
};

/// Runs the nine process x decoherence combinations on top of `base`
/// (process and decoherence fields of `base` are overridden).
Table1 run_table1(const ExperimentConfig& base, kernels::KernelVariant kernel = kernels::KernelVariant::Auto);

}  // namespace qqpt::experiment
