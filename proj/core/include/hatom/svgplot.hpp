#pragma once

// Dependency-light static vector graphics: time-series line plots and plane
// heatmaps as self-contained SVG files.

#include <string>
#include <vector>

#include "hatom/density.hpp"

namespace hatom::io {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Line plot with axes, ticks, and a legend. Empty input is rejected.
std::string timeseries_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series);

// Heatmap of a planar density (downsampled by block averaging to at most
// max_cells per axis) with a colorbar.
std::string heatmap_svg(const std::string& title, const PlanarDensity& density,
                        int max_cells = 128);

void write_svg(const std::string& path, const std::string& svg);

} // namespace hatom::io
