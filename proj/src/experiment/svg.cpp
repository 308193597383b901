#include "qqpt/experiment/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace qqpt::experiment {

namespace {

constexpr double kCell = 28.0;
constexpr double kMarginLeft = 34.0;
constexpr double kMarginTop = 34.0;
constexpr double kBarWidth = 14.0;
constexpr double kBarGap = 16.0;
constexpr double kBarLabelWidth = 56.0;

// Viridis control points.
constexpr std::array<std::array<double, 3>, 5> kStops{{
    {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

std::string color_for(double v) {
  v = std::clamp(std::isfinite(v) ? v : 0.0, 0.0, 1.0);
  const double x = v * (kStops.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(x), kStops.size() - 2);
  const double f = x - static_cast<double>(i);
  std::array<int, 3> rgb{};
  for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround(kStops[i][c] + f * (kStops[i + 1][c] - kStops[i][c])));
  return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

double panel_width(int n) { return kMarginLeft + n * kCell + 10.0; }
double panel_height(int n) { return kMarginTop + n * kCell + 24.0; }

void draw_panel(std::string& out, const HeatmapPanel& p, double x0, double y0, double vmax) {
  const int n = static_cast<int>(p.values.rows());
  out += fmt::format("<g transform=\"translate({:.1f},{:.1f})\">\n", x0, y0);
  out += fmt::format("<text x=\"{:.1f}\" y=\"16\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                     kMarginLeft + n * kCell / 2.0, p.title);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < p.values.cols(); ++c) {
      const double v = vmax > 0.0 ? p.values(r, c) / vmax : 0.0;
      out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\"/>\n",
                         kMarginLeft + c * kCell, kMarginTop + r * kCell, kCell, kCell, color_for(v));
    }
  }
  for (int i = 0; i < n; ++i) {
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" text-anchor=\"end\">{}</text>\n",
                       kMarginLeft - 4.0, kMarginTop + (i + 0.65) * kCell, i + 1);
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
                       kMarginLeft + (i + 0.5) * kCell, kMarginTop + n * kCell + 14.0, i + 1);
  }
  out += "</g>\n";
}

void draw_colorbar(std::string& out, double x0, double y0, double height, double vmax) {
  constexpr int kSteps = 64;
  const double h = height / kSteps;
  for (int s = 0; s < kSteps; ++s) {
    const double v = 1.0 - (s + 0.5) / kSteps;
    out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.2f}\" width=\"{:.1f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", x0,
                       y0 + s * h, kBarWidth, h + 0.05, color_for(v));
  }
  for (int tick = 0; tick <= 4; ++tick) {
    const double frac = tick / 4.0;
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\">{:.3g}</text>\n", x0 + kBarWidth + 4.0,
                       y0 + (1.0 - frac) * height + 3.0, frac * vmax);
  }
}

}  // namespace

std::string render_heatmap_svg(const HeatmapPanel& panel) { return render_panel_grid_svg({panel}, 1); }

std::string render_panel_grid_svg(const std::vector<HeatmapPanel>& panels, int columns) {
  columns = std::max(columns, 1);
  const int n = panels.empty() ? 9 : static_cast<int>(panels.front().values.rows());
  const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
  const double pw = panel_width(n);
  const double ph = panel_height(n);
  const double width = columns * pw + kBarGap + kBarWidth + kBarLabelWidth;
  const double height = std::max(rows, 1) * ph;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\" "
      "font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height, width, height);
  for (int r = 0; r < rows; ++r) {
    double vmax = 0.0;
    for (int c = 0; c < columns; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r * columns + c);
      if (idx < panels.size() && panels[idx].values.size() > 0) vmax = std::max(vmax, panels[idx].values.maxCoeff());
    }
    for (int c = 0; c < columns; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r * columns + c);
      if (idx < panels.size()) draw_panel(out, panels[idx], c * pw, r * ph, vmax);
    }
    draw_colorbar(out, columns * pw + kBarGap, r * ph + kMarginTop, n * kCell, vmax);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qqpt::experiment
