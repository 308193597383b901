#pragma once
// Subcommand implementations for the qutrit_qpt tool. Each returns a process
// exit code and writes human-readable output to `log`.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "qqpt/kernels.hpp"

namespace qqpt::experiment {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericalFailure = 3,
  kExitValidationFailure = 4,
};

struct CommandOptions {
  std::optional<std::filesystem::path> config;
  std::filesystem::path out = "out";
  std::optional<std::string> process;
  std::optional<std::string> decoherence;
  kernels::KernelVariant kernel = kernels::KernelVariant::Auto;
  bool all_basis_inputs = false;
};

int cmd_simulate(const CommandOptions& opts, std::ostream& log);
int cmd_qpt(const CommandOptions& opts, std::ostream& log);
int cmd_table1(const CommandOptions& opts, std::ostream& log);
int cmd_validate(const std::filesystem::path& chi_path, const CommandOptions& opts, std::ostream& log);

}  // namespace qqpt::experiment
