#include "qqpt/experiment/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qqpt::experiment {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json matrix_to_json(const CMatrixN& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row_re = json::array();
    json row_im = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return {{"real", std::move(re)}, {"imag", std::move(im)}};
}

CMatrixN matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_object() || !j.contains("real") || !j.contains("imag")) throw ReportError("matrix: expected {real, imag}");
  CMatrixN m(rows, cols);
  const json& re = j["real"];
  const json& im = j["imag"];
  if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(rows) ||
      im.size() != static_cast<std::size_t>(rows)) {
    throw ReportError("matrix: expected " + std::to_string(rows) + " rows");
  }
  for (int r = 0; r < rows; ++r) {
    if (!re[r].is_array() || !im[r].is_array() || re[r].size() != static_cast<std::size_t>(cols) ||
        im[r].size() != static_cast<std::size_t>(cols)) {
      throw ReportError("matrix: row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      if (!re[r][c].is_number() || !im[r][c].is_number()) throw ReportError("matrix: non-numeric entry");
      m(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
    }
  }
  return m;
}

json validation_to_json(const ValidationReport& v) {
  return {{"hermiticity_residual", v.hermiticity_residual},
          {"min_eigenvalue", v.min_eigenvalue},
          {"tp_residual", v.tp_residual},
          {"trace", {{"real", v.trace.real()}, {"imag", v.trace.imag()}}},
          {"kraus_rank", v.kraus_rank},
          {"passes", v.passes()}};
}

json simulation_report(const SimulationResult& r) {
  json j;
  j["config"] = r.config.to_json();
  j["final_state"] = matrix_to_json(r.final_state);
  j["transfer_fidelity"] = r.transfer_fidelity;
  if (!r.basis_outputs.empty()) {
    json outs = json::array();
    for (const CMatrix3& m : r.basis_outputs) outs.push_back(matrix_to_json(m));
    j["basis_outputs"] = std::move(outs);
  }
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

json qpt_report(const QptResult& r) {
  json j;
  j["config"] = r.config.to_json();
  j["basis_order"] = {"I", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"};
  j["chi"] = matrix_to_json(r.chi.chi);
  j["validation"] = validation_to_json(r.validation);
  j["beta_condition"] = r.beta_condition;
  j["transfer_fidelity"] = r.transfer_fidelity;
  json outs = json::array();
  for (const CMatrix3& m : r.basis_outputs) outs.push_back(matrix_to_json(m));
  j["basis_outputs"] = std::move(outs);
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

json table1_report(const Table1& t) {
  json rows = json::array();
  for (const Table1Row& row : t.rows) {
    const Table1Row ref = table1_reference(row.process);
    const auto got = row.values();
    const auto want = ref.values();
    json entry;
    entry["process"] = std::string(to_string(row.process));
    for (std::size_t c = 0; c < got.size(); ++c) {
      entry["values"][kTableColumns[c]] = got[c];
      entry["reference"][kTableColumns[c]] = want[c];
      entry["deviation"][kTableColumns[c]] = got[c] - want[c];
    }
    rows.push_back(std::move(entry));
  }
  return {{"rows", std::move(rows)}, {"process_metric_normalization", "trace"}};
}

std::string real_grid_csv(const Eigen::MatrixXd& grid) {
  std::string out;
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c) out += ',';
      out += format_double(grid(r, c));
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd parse_real_grid_csv(const std::string& text, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  std::istringstream in(text);
  std::string line;
  int r = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (r >= rows) throw ReportError("csv: more than " + std::to_string(rows) + " rows");
    std::istringstream cells(line);
    std::string cell;
    int c = 0;
    while (std::getline(cells, cell, ',')) {
      if (c >= cols) throw ReportError("csv: row " + std::to_string(r) + " has more than " + std::to_string(cols) + " columns");
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      while (end && (*end == ' ' || *end == '\r')) ++end;
      if (end == cell.c_str() || (end && *end != '\0')) throw ReportError("csv: cannot parse '" + cell + "'");
      m(r, c++) = v;
    }
    if (c != cols) throw ReportError("csv: row " + std::to_string(r) + " has " + std::to_string(c) + " columns");
    ++r;
  }
  if (r != rows) throw ReportError("csv: expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
  return m;
}

void write_chi_csv(const std::filesystem::path& dir, const ProcessMatrix& chi) {
  write_text(dir / "chi_real.csv", real_grid_csv(chi.chi.real()));
  write_text(dir / "chi_imag.csv", real_grid_csv(chi.chi.imag()));
  write_text(dir / "chi_abs.csv", real_grid_csv(chi.chi.cwiseAbs()));
}

ProcessMatrix load_chi(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  ProcessMatrix out;
  if (fs::is_directory(path) || path.filename() == "chi_real.csv") {
    const fs::path dir = fs::is_directory(path) ? path : path.parent_path();
    const Eigen::MatrixXd re = parse_real_grid_csv(read_text(dir / "chi_real.csv"), kBasisSize, kBasisSize);
    const Eigen::MatrixXd im = parse_real_grid_csv(read_text(dir / "chi_imag.csv"), kBasisSize, kBasisSize);
    out.chi = re.cast<Complex>() + Complex{0.0, 1.0} * im.cast<Complex>();
    return out;
  }
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ReportError("cannot parse " + path.string() + ": " + e.what());
  }
  out.chi = matrix_from_json(j.contains("chi") ? j["chi"] : j, kBasisSize, kBasisSize);
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ReportError("cannot write " + path.string());
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qqpt::experiment
