#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "divorient/format.hpp"

namespace divorient::cli {

namespace {

constexpr double kWidth = 960, kHeight = 640;
constexpr double kLeft = 90, kRight = 180, kTop = 50, kBottom = 70;

struct StrokeStyle {
    const char* color;
    const char* dash;
};

// Six hues, solid then dashed.
constexpr std::array<StrokeStyle, 12> kStyles{{
    {"#1f77b4", "none"}, {"#d62728", "none"}, {"#2ca02c", "none"}, {"#ff7f0e", "none"},
    {"#9467bd", "none"}, {"#17becf", "none"}, {"#1f77b4", "6,4"},  {"#d62728", "6,4"},
    {"#2ca02c", "6,4"},  {"#ff7f0e", "6,4"},  {"#9467bd", "6,4"},  {"#17becf", "6,4"},
}};

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) { lo = std::min(lo, v); hi = std::max(hi, v); }
    void widen()
    {
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

void check(const PlotSeries& s)
{
    if (s.points.empty())
        throw std::invalid_argument("plot: series '" + s.label + "' is empty");
    for (auto [x, y] : s.points)
        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("plot: series '" + s.label + "' has a non-finite point");
}

}  // namespace

std::string render_svg(const PlotSpec& spec)
{
    if (spec.series.empty())
        throw std::invalid_argument("plot: no data series");
    Range xr, yr;
    for (const auto* group : {&spec.series, &spec.overlay_curves}) {
        for (const auto& s : *group) {
            check(s);
            for (auto [x, y] : s.points) {
                xr.add(x);
                yr.add(y);
            }
        }
    }
    for (const auto& l : spec.overlay_lines) {
        yr.add(l.slope * xr.lo + l.intercept);
        yr.add(l.slope * xr.hi + l.intercept);
    }
    if (spec.y_range) {
        yr.lo = spec.y_range->first;
        yr.hi = spec.y_range->second;
    }
    xr.widen();
    yr.widen();

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    if (!spec.title.empty())
        os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">"
           << escape(spec.title) << "</text>\n";

    // Axes and ticks.
    os << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
       << "\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph << "\"/>\n"
       << "</g>\n<g class=\"ticks\" font-size=\"12\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double yv = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        os << "<text x=\"" << num(sx(xv)) << "\" y=\"" << kTop + ph + 20 << "\" text-anchor=\"middle\">" << num(xv)
           << "</text>\n"
           << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">" << num(yv)
           << "</text>\n";
    }
    os << "</g>\n"
       << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 20 << "\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(spec.x_label) << "</text>\n"
       << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
       << kTop + ph / 2 << ")\">" << escape(spec.y_label) << "</text>\n";

    auto polyline = [&](const PlotSeries& s, const char* cls, const StrokeStyle& style) {
        os << "<polyline class=\"" << cls << "\" data-label=\"" << escape(s.label) << "\" fill=\"none\" stroke=\""
           << style.color << "\" stroke-width=\"1.5\" stroke-dasharray=\"" << style.dash << "\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i)
            os << (i ? " " : "") << num(sx(s.points[i].first)) << ',' << num(sy(s.points[i].second));
        os << "\"/>\n";
    };

    std::size_t legend_row = 0;
    auto legend = [&](const std::string& label, const StrokeStyle& style) {
        const double y = kTop + 10 + 20.0 * static_cast<double>(legend_row++);
        os << "<line x1=\"" << kLeft + pw + 15 << "\" y1=\"" << y << "\" x2=\"" << kLeft + pw + 45 << "\" y2=\"" << y
           << "\" stroke=\"" << style.color << "\" stroke-dasharray=\"" << style.dash << "\"/>\n"
           << "<text x=\"" << kLeft + pw + 50 << "\" y=\"" << y + 4 << "\" font-size=\"12\">" << escape(label)
           << "</text>\n";
    };

    std::size_t style_index = 0;
    for (const auto& s : spec.series) {
        const auto& style = kStyles[style_index++ % kStyles.size()];
        polyline(s, "series", style);
        legend(s.label, style);
    }
    for (const auto& s : spec.overlay_curves) {
        const auto& style = kStyles[style_index++ % kStyles.size()];
        polyline(s, "overlay", style);
        legend(s.label, style);
    }
    for (const auto& l : spec.overlay_lines) {
        const auto& style = kStyles[style_index++ % kStyles.size()];
        os << "<line class=\"overlay-fit\" data-label=\"" << escape(l.label) << "\" data-slope=\""
           << format_double(l.slope) << "\" data-intercept=\"" << format_double(l.intercept) << "\" x1=\""
           << num(sx(xr.lo)) << "\" y1=\"" << num(sy(l.slope * xr.lo + l.intercept)) << "\" x2=\"" << num(sx(xr.hi))
           << "\" y2=\"" << num(sy(l.slope * xr.hi + l.intercept)) << "\" stroke=\"" << style.color
           << "\" stroke-width=\"2\" stroke-dasharray=\"" << style.dash << "\"/>\n";
        legend(l.label, style);
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace divorient::cli
