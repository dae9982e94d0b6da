#pragma once

// Minimal line-plot renderer emitting standalone SVG markup: fixed 800x500
// viewport, linear axes with auto ticks, fixed colour palette, optional
// dashed stroke per series (used to overlay an approximation on a reference
// run). Output is a deterministic function of the input.

#include <string>
#include <utility>
#include <vector>

namespace dilat {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points; // (x, y), x ascending
    bool dashed = false;
};

struct PlotOptions {
    int width = 800;
    int height = 500;
    std::string title;
    std::string x_label = "z";
    std::string y_label = "intensity";
};

std::string render_line_svg(const std::vector<PlotSeries>& series, const PlotOptions& opts);

} // namespace dilat
