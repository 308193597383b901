#pragma once
// Self-contained SVG heatmaps of process-matrix magnitudes. Axis labels 1..9
// follow the operator basis order (1 = identity, 2..9 = Lambda_1..Lambda_8).

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qqpt::experiment {

struct HeatmapPanel {
  std::string title;
  Eigen::MatrixXd values;
};

/// One heatmap with its own linear color bar.
std::string render_heatmap_svg(const HeatmapPanel& panel);

/// Panels laid out row-major in a grid of `columns`; each figure row shares a
/// linear color scale and a color bar at its right.
std::string render_panel_grid_svg(const std::vector<HeatmapPanel>& panels, int columns);

}  // namespace qqpt::experiment
