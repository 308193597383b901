#include "qqpt/experiment/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace qqpt::experiment {

using nlohmann::json;

namespace {

constexpr double kMHzToPerNs = 1e-3;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& obj, const std::string& key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": not finite");
  return x;
}

}  // namespace

ExperimentConfig default_config() { return ExperimentConfig{}; }

void set_decoherence_preset(ExperimentConfig& cfg, const std::string& name) {
  if (name == "none") {
    cfg.rates = DecoherenceRates::none();
  } else if (name == "d1") {
    cfg.rates = DecoherenceRates::d1();
  } else if (name == "d2") {
    cfg.rates = DecoherenceRates::d2();
  } else {
    throw ConfigError("unknown decoherence preset '" + name + "' (expected none, d1, d2)");
  }
  cfg.decoherence = name;
}

void set_process(ExperimentConfig& cfg, const std::string& name) {
  const auto kind = parse_hamiltonian_kind(name);
  if (!kind) throw ConfigError("unknown process '" + name + "' (expected stirap, sastirap, twophoton, identity)");
  cfg.process = *kind;
}

ExperimentConfig parse_config(const json& j) {
  reject_unknown(j, {"process", "pulse", "transitions", "detuning", "decoherence", "grid", "all_basis_inputs"}, "config");
  ExperimentConfig cfg;

  if (j.contains("process")) {
    if (!j["process"].is_string()) throw ConfigError("config.process: expected a string");
    set_process(cfg, j["process"].get<std::string>());
  }

  const json empty = json::object();
  const json& pulse = j.contains("pulse") ? j["pulse"] : empty;
  reject_unknown(pulse, {"amp01_mhz", "amp12_mhz", "sigma_ns", "t_sep_ns", "phi01", "phi12", "phi02"}, "pulse");
  PulseParams& p = cfg.pulse;
  p.amp01 = number(pulse, "amp01_mhz", 45.0, "pulse") * kMHzToRadPerNs;
  p.amp12 = number(pulse, "amp12_mhz", 45.0, "pulse") * kMHzToRadPerNs;
  p.sigma = number(pulse, "sigma_ns", 35.0, "pulse");
  p.t_sep = number(pulse, "t_sep_ns", -0.8 * p.sigma, "pulse");
  p.phi01 = number(pulse, "phi01", 0.0, "pulse");
  p.phi12 = number(pulse, "phi12", 0.0, "pulse");
  p.phi02 = number(pulse, "phi02", p.counterdiabatic_phi02(), "pulse");

  const json& tr = j.contains("transitions") ? j["transitions"] : empty;
  reject_unknown(tr, {"omega01_ghz", "omega12_ghz"}, "transitions");
  cfg.omega01_ghz = number(tr, "omega01_ghz", 5.27, "transitions");
  cfg.omega12_ghz = number(tr, "omega12_ghz", 4.82, "transitions");
  p.big_delta = (cfg.omega01_ghz - cfg.omega12_ghz) / 2.0 * kGHzToRadPerNs;

  const json& det = j.contains("detuning") ? j["detuning"] : empty;
  reject_unknown(det, {"delta01_mhz", "delta12_mhz"}, "detuning");
  p.delta01 = number(det, "delta01_mhz", 0.0, "detuning") * kMHzToRadPerNs;
  p.delta12 = number(det, "delta12_mhz", 0.0, "detuning") * kMHzToRadPerNs;

  if (j.contains("decoherence")) {
    const json& d = j["decoherence"];
    if (d.is_string()) {
      set_decoherence_preset(cfg, d.get<std::string>());
    } else {
      reject_unknown(d, {"gamma_rel_10_mhz", "gamma_rel_21_mhz", "gamma_phi_10_mhz", "gamma_phi_21_mhz", "gamma_phi_20_mhz"},
                     "decoherence");
      cfg.rates = DecoherenceRates{number(d, "gamma_rel_10_mhz", 0.0, "decoherence") * kMHzToPerNs,
                                   number(d, "gamma_rel_21_mhz", 0.0, "decoherence") * kMHzToPerNs,
                                   number(d, "gamma_phi_10_mhz", 0.0, "decoherence") * kMHzToPerNs,
                                   number(d, "gamma_phi_21_mhz", 0.0, "decoherence") * kMHzToPerNs,
                                   number(d, "gamma_phi_20_mhz", 0.0, "decoherence") * kMHzToPerNs};
      cfg.decoherence = "custom";
    }
  }

  const json& grid = j.contains("grid") ? j["grid"] : empty;
  reject_unknown(grid, {"t_start_ns", "t_end_ns", "n_steps", "substeps"}, "grid");
  cfg.grid.t_start = number(grid, "t_start_ns", -182.0, "grid");
  cfg.grid.t_end = number(grid, "t_end_ns", 140.0, "grid");
  for (const char* key : {"n_steps", "substeps"}) {
    if (grid.contains(key) && !grid[key].is_number_integer()) throw ConfigError(std::string("grid.") + key + ": expected an integer");
  }
  cfg.grid.n_steps = grid.value("n_steps", 1800);
  cfg.grid.substeps = grid.value("substeps", 8);

  if (j.contains("all_basis_inputs")) {
    if (!j["all_basis_inputs"].is_boolean()) throw ConfigError("config.all_basis_inputs: expected a boolean");
    cfg.all_basis_inputs = j["all_basis_inputs"].get<bool>();
  }

  try {
    cfg.pulse.validate();
    cfg.rates.validate();
    cfg.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.process == HamiltonianKind::SaStirap || cfg.process == HamiltonianKind::TwoPhoton) {
    if (!(cfg.pulse.big_delta > 0.0)) throw ConfigError("transitions: omega01 must exceed omega12 for two-photon drives");
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

json ExperimentConfig::to_json() const {
  json j;
  j["process"] = std::string(qqpt::to_string(process));
  j["pulse"] = {{"amp01_mhz", pulse.amp01 / kMHzToRadPerNs},
                {"amp12_mhz", pulse.amp12 / kMHzToRadPerNs},
                {"sigma_ns", pulse.sigma},
                {"t_sep_ns", pulse.t_sep},
                {"phi01", pulse.phi01},
                {"phi12", pulse.phi12},
                {"phi02", pulse.phi02}};
  j["transitions"] = {{"omega01_ghz", omega01_ghz}, {"omega12_ghz", omega12_ghz}};
  j["detuning"] = {{"delta01_mhz", pulse.delta01 / kMHzToRadPerNs}, {"delta12_mhz", pulse.delta12 / kMHzToRadPerNs}};
  if (decoherence == "custom") {
    j["decoherence"] = {{"gamma_rel_10_mhz", rates.gamma_rel_10 / kMHzToPerNs},
                        {"gamma_rel_21_mhz", rates.gamma_rel_21 / kMHzToPerNs},
                        {"gamma_phi_10_mhz", rates.gamma_phi_10 / kMHzToPerNs},
                        {"gamma_phi_21_mhz", rates.gamma_phi_21 / kMHzToPerNs},
                        {"gamma_phi_20_mhz", rates.gamma_phi_20 / kMHzToPerNs}};
  } else {
    j["decoherence"] = decoherence;
  }
  j["grid"] = {{"t_start_ns", grid.t_start}, {"t_end_ns", grid.t_end}, {"n_steps", grid.n_steps}, {"substeps", grid.substeps}};
  j["all_basis_inputs"] = all_basis_inputs;
  return j;
}

}  // namespace qqpt::experiment
