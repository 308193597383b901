// qutrit_qpt: simulate STIRAP-family drives on a qutrit and reconstruct the
// process matrix.
//
//   qutrit_qpt simulate [--config f] [--process p] [--decoherence d] [--out dir]
//   qutrit_qpt qpt      [--config f] [--process p] [--decoherence d] [--out dir]
//   qutrit_qpt table1   [--config f] [--out dir]
//   qutrit_qpt validate <chi: output dir | chi_real.csv | report.json>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qqpt/experiment/commands.hpp"

namespace {

void add_common(CLI::App* cmd, qqpt::experiment::CommandOptions& opts, std::string& kernel) {
  cmd->add_option_function<std::string>("--config", [&opts](const std::string& p) { opts.config = p; },
                                        "JSON experiment config")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts.out, "Output directory")->capture_default_str();
  cmd->add_option_function<std::string>("--process", [&opts](const std::string& p) { opts.process = p; },
                                        "Override process")
      ->check(CLI::IsMember({"stirap", "sastirap", "twophoton", "identity"}));
  cmd->add_option_function<std::string>("--decoherence", [&opts](const std::string& d) { opts.decoherence = d; },
                                        "Override decoherence preset")
      ->check(CLI::IsMember({"none", "d1", "d2"}));
  cmd->add_option("--kernel", kernel, "RK4 kernel variant")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qqpt::experiment;
  CLI::App app{"Qutrit process tomography of STIRAP, saSTIRAP and two-photon drives"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string kernel = "auto";
  std::string chi_path;

  CLI::App* simulate = app.add_subcommand("simulate", "Propagate |0><0| and report the transfer fidelity");
  add_common(simulate, opts, kernel);
  simulate->add_flag("--all-basis", opts.all_basis_inputs, "Also propagate all nine |p><q| inputs");

  CLI::App* qpt = app.add_subcommand("qpt", "Reconstruct the 9x9 process matrix");
  add_common(qpt, opts, kernel);

  CLI::App* table1 = app.add_subcommand("table1", "Run all process x decoherence combinations");
  add_common(table1, opts, kernel);

  CLI::App* validate = app.add_subcommand("validate", "Check a chi file for physicality");
  add_common(validate, opts, kernel);
  validate->add_option("chi", chi_path, "Output directory, chi_real.csv or report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    opts.kernel = qqpt::kernels::parse_kernel_variant(kernel);
    if (*simulate) return cmd_simulate(opts, std::cout);
    if (*qpt) return cmd_qpt(opts, std::cout);
    if (*table1) return cmd_table1(opts, std::cout);
    if (*validate) return cmd_validate(chi_path, opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
  return kExitConfigError;
}
