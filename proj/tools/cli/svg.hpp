#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace divorient::cli {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// y = slope * x + intercept drawn across the x range.
struct OverlayLine {
    std::string label;
    double slope = 0.0;
    double intercept = 0.0;
};

struct PlotSpec {
    std::vector<PlotSeries> series;
    std::vector<PlotSeries> overlay_curves;
    std::vector<OverlayLine> overlay_lines;
    std::string x_label;
    std::string y_label;
    std::string title;
    std::optional<std::pair<double, double>> y_range;
};

/// Self-contained SVG 1.1, 960x640 viewBox. Data series are
/// <polyline class="series">, overlay curves <polyline class="overlay">,
/// fitted lines <line class="overlay-fit" data-slope=.. data-intercept=..>.
/// Throws std::invalid_argument on an empty series or non-finite point.
std::string render_svg(const PlotSpec& spec);

}  // namespace divorient::cli
