#pragma once
// Experiment configuration. Files are JSON objects in lab units (MHz, GHz, ns);
// everything is converted to rad/ns and 1/ns at parse time. Unknown keys are
// rejected.
//
//   {
//     "process": "stirap" | "sastirap" | "twophoton" | "identity",
//     "pulse": {"amp01_mhz", "amp12_mhz", "sigma_ns", "t_sep_ns", "phi01", "phi12", "phi02"},
//     "transitions": {"omega01_ghz", "omega12_ghz"},
//     "detuning": {"delta01_mhz", "delta12_mhz"},
//     "decoherence": "none" | "d1" | "d2" |
//                    {"gamma_rel_10_mhz", "gamma_rel_21_mhz", "gamma_phi_10_mhz",
//                     "gamma_phi_21_mhz", "gamma_phi_20_mhz"},
//     "grid": {"t_start_ns", "t_end_ns", "n_steps", "substeps"},
//     "all_basis_inputs": bool
//   }
//
// Every key is optional; omitted values take the reference experiment's
// parameters. An omitted t_sep_ns defaults to -0.8 sigma and an omitted phi02
// to the counterdiabatic value phi01 + phi12 + pi/2.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qqpt/dynamics.hpp"
#include "qqpt/hamiltonians.hpp"
#include "qqpt/pulses.hpp"

namespace qqpt::experiment {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  HamiltonianKind process = HamiltonianKind::Stirap;
  PulseParams pulse;
  double omega01_ghz = 5.27;
  double omega12_ghz = 4.82;
  std::string decoherence = "none";  // none | d1 | d2 | custom
  DecoherenceRates rates;
  TimeGrid grid;
  bool all_basis_inputs = false;

  /// Config in file units; parse_config(to_json()) reproduces the config.
  nlohmann::json to_json() const;
};

ExperimentConfig default_config();
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sets rates from a preset name (none | d1 | d2). Throws ConfigError otherwise.
void set_decoherence_preset(ExperimentConfig& cfg, const std::string& name);
void set_process(ExperimentConfig& cfg, const std::string& name);

}  // namespace qqpt::experiment
