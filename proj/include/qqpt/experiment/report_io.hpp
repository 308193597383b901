#pragma once
// Serialization of run artifacts: chi grids as CSV, run reports as JSON.
// Numbers are written with 17 significant digits so reloading is lossless.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qqpt/experiment/runner.hpp"

namespace qqpt::experiment {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x);

nlohmann::json matrix_to_json(const CMatrixN& m);
CMatrixN matrix_from_json(const nlohmann::json& j, int rows, int cols);

nlohmann::json validation_to_json(const ValidationReport& v);
nlohmann::json simulation_report(const SimulationResult& r);
nlohmann::json qpt_report(const QptResult& r);
nlohmann::json table1_report(const Table1& t);

/// Comma-separated, row-major, one matrix row per line.
std::string real_grid_csv(const Eigen::MatrixXd& grid);
Eigen::MatrixXd parse_real_grid_csv(const std::string& text, int rows, int cols);

/// Writes chi_real.csv, chi_imag.csv and chi_abs.csv into `dir`.
void write_chi_csv(const std::filesystem::path& dir, const ProcessMatrix& chi);

/// Loads chi from an output directory (chi_real.csv + chi_imag.csv), from
/// chi_real.csv itself, or from a report.json containing a "chi" entry.
ProcessMatrix load_chi(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace qqpt::experiment
