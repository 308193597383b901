#include "qqpt/experiment/commands.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qqpt/experiment/config.hpp"
#include "qqpt/experiment/report_io.hpp"
#include "qqpt/experiment/runner.hpp"
#include "qqpt/experiment/svg.hpp"

namespace qqpt::experiment {

namespace {

ExperimentConfig resolve_config(const CommandOptions& opts) {
  ExperimentConfig cfg = opts.config ? load_config(*opts.config) : default_config();
  if (opts.process) set_process(cfg, *opts.process);
  if (opts.decoherence) set_decoherence_preset(cfg, *opts.decoherence);
  if (opts.all_basis_inputs) cfg.all_basis_inputs = true;
  return cfg;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ReportError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string process_label(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Stirap: return "STIRAP";
    case HamiltonianKind::SaStirap: return "saSTIRAP";
    case HamiltonianKind::TwoPhoton: return "Two-photon";
    case HamiltonianKind::Identity: return "Identity";
  }
  return "?";
}

void print_validation(std::ostream& log, const ValidationReport& v) {
  const ValidationReport::Thresholds t;
  fmt::print(log, "hermiticity residual  {:.3e}  (<= {:.0e}) {}\n", v.hermiticity_residual, t.hermiticity,
             v.hermiticity_residual <= t.hermiticity ? "ok" : "FAIL");
  fmt::print(log, "trace-preservation    {:.3e}  (<= {:.0e}) {}\n", v.tp_residual, t.tp, v.tp_residual <= t.tp ? "ok" : "FAIL");
  fmt::print(log, "min eigenvalue        {:.3e}  (>= {:.0e}) {}\n", v.min_eigenvalue, t.min_eigenvalue,
             v.min_eigenvalue >= t.min_eigenvalue ? "ok" : "FAIL");
  fmt::print(log, "trace(chi)            {:.6f}{:+.2e}i\n", v.trace.real(), v.trace.imag());
  fmt::print(log, "kraus rank            {}\n", v.kraus_rank);
}

template <typename Fn>
int guarded(std::ostream& log, Fn&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    fmt::print(log, "config error: {}\n", e.what());
    return kExitConfigError;
  } catch (const ReportError& e) {
    fmt::print(log, "input error: {}\n", e.what());
    return kExitConfigError;
  } catch (const NumericalError& e) {
    fmt::print(log, "numerical failure: {}\n", e.what());
    return kExitNumericalFailure;
  } catch (const std::domain_error& e) {
    fmt::print(log, "numerical failure: {}\n", e.what());
    return kExitNumericalFailure;
  }
}

}  // namespace

int cmd_simulate(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const ExperimentConfig cfg = resolve_config(opts);
    const SimulationResult r = run_simulation(cfg, opts.kernel);
    fmt::print(log, "process {} decoherence {}\n", to_string(cfg.process), cfg.decoherence);
    fmt::print(log, "final state from |0><0|:\n");
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) fmt::print(log, "  {:+.6f}{:+.6f}i", r.final_state(a, b).real(), r.final_state(a, b).imag());
      fmt::print(log, "\n");
    }
    fmt::print(log, "transfer fidelity <2|rho|2> = {:.6f}\n", r.transfer_fidelity);
    ensure_dir(opts.out);
    write_text(opts.out / "report.json", simulation_report(r).dump(2) + "\n");
    return int{kExitOk};
  });
}

int cmd_qpt(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const ExperimentConfig cfg = resolve_config(opts);
    const QptResult r = run_qpt(cfg, opts.kernel);
    ensure_dir(opts.out);
    write_chi_csv(opts.out, r.chi);
    write_text(opts.out / "report.json", qpt_report(r).dump(2) + "\n");
    const std::string title = fmt::format("|chi| {} ({})", process_label(cfg.process), cfg.decoherence);
    write_text(opts.out / "chi.svg", render_heatmap_svg({title, r.chi.chi.cwiseAbs()}));

    fmt::print(log, "process {} decoherence {}\n", to_string(cfg.process), cfg.decoherence);
    fmt::print(log, "beta condition number {:.3f}\n", r.beta_condition);
    fmt::print(log, "transfer fidelity     {:.6f}\n", r.transfer_fidelity);
    print_validation(log, r.validation);
    fmt::print(log, "wrote {}\n", opts.out.string());
    return int{r.validation.passes() ? kExitOk : kExitValidationFailure};
  });
}

int cmd_table1(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const ExperimentConfig base = resolve_config(opts);
    const Table1 table = run_table1(base, opts.kernel);

    fmt::print(log, "{:<12}", "");
    for (const char* col : kTableColumns) fmt::print(log, "{:>18}", col);
    fmt::print(log, "\n");
    for (const Table1Row& row : table.rows) {
      const auto got = row.values();
      const auto want = table1_reference(row.process).values();
      fmt::print(log, "{:<12}", process_label(row.process));
      for (std::size_t c = 0; c < got.size(); ++c) fmt::print(log, "{:>18}", fmt::format("{:.3f} ({:+.3f})", got[c], got[c] - want[c]));
      fmt::print(log, "\n");
    }
    fmt::print(log, "values in parentheses: deviation from the reference values; process metrics use chi / Tr chi\n");

    ensure_dir(opts.out);
    write_text(opts.out / "table1.json", table1_report(table).dump(2) + "\n");
    std::vector<HeatmapPanel> panels;
    const char letters[] = "abcdefghi";
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t d = 0; d < 3; ++d) {
        const QptResult& r = table.runs[i][d];
        const std::string deco = d == 0 ? "no decoherence" : kTableDecoherence[d];
        panels.push_back({fmt::format("({}) {}, {}", letters[3 * i + d], process_label(r.config.process), deco),
                          r.chi.chi.cwiseAbs()});
      }
    write_text(opts.out / "fig1.svg", render_panel_grid_svg(panels, 3));
    fmt::print(log, "wrote {}\n", opts.out.string());
    return int{kExitOk};
  });
}

int cmd_validate(const std::filesystem::path& chi_path, const CommandOptions& opts, std::ostream& log) {
  (void)opts;
  return guarded(log, [&] {
    const ProcessMatrix chi = load_chi(chi_path);
    if (!chi.chi.allFinite()) throw ReportError("chi contains non-finite entries");
    const ValidationReport v = validate_chi(chi, operator_basis());
    print_validation(log, v);
    return int{v.passes() ? kExitOk : kExitValidationFailure};
  });
}

}  // namespace qqpt::experiment
