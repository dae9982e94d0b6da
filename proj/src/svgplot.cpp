#include "dilat/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dilat {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    double tick = 0.25;
};

// Largest {1,2,5}*10^k step giving at most `max_ticks` intervals.
double nice_step(double range, int max_ticks) {
    const double raw = range / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) return mag * mult;
    }
    return mag * 10.0;
}

Axis fit_axis(double lo, double hi) {
    if (!(hi > lo)) hi = lo + 1.0;
    Axis ax;
    ax.tick = nice_step(hi - lo, 6);
    ax.lo = std::floor(lo / ax.tick) * ax.tick;
    ax.hi = std::ceil(hi / ax.tick) * ax.tick;
    return ax;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt_px(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
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

} // namespace

std::string render_line_svg(const std::vector<PlotSeries>& series, const PlotOptions& opts) {
    if (series.empty()) throw std::invalid_argument("render_line_svg: no series");
    if (opts.width < 200 || opts.height < 150)
        throw std::invalid_argument("render_line_svg: viewport too small");

    double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y))
                throw std::invalid_argument("render_line_svg: non-finite point");
            if (first) {
                x_lo = x_hi = x;
                y_lo = y_hi = y;
                first = false;
            } else {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, y);
                y_hi = std::max(y_hi, y);
            }
        }
    }
    if (first) throw std::invalid_argument("render_line_svg: all series empty");

    const Axis xa = fit_axis(x_lo, x_hi);
    const Axis ya = fit_axis(y_lo, y_hi);

    const double ml = 62.0, mr = 16.0, mt = opts.title.empty() ? 16.0 : 36.0, mb = 46.0;
    const double pw = opts.width - ml - mr;
    const double ph = opts.height - mt - mb;
    auto px = [&](double x) { return ml + (x - xa.lo) / (xa.hi - xa.lo) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ya.lo) / (ya.hi - ya.lo) * ph; };

    std::string svg;
    char head[256];
    std::snprintf(head, sizeof(head),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  opts.width, opts.height, opts.width, opts.height);
    svg += head;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!opts.title.empty())
        svg += "<text x=\"" + fmt_px(opts.width / 2.0) +
               "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
               "text-anchor=\"middle\">" +
               escape_xml(opts.title) + "</text>\n";

    // Grid, ticks, tick labels.
    const double eps_x = xa.tick * 1e-9;
    for (double t = xa.lo; t <= xa.hi + eps_x; t += xa.tick) {
        const std::string x = fmt_px(px(t));
        svg += "<line x1=\"" + x + "\" y1=\"" + fmt_px(mt) + "\" x2=\"" + x + "\" y2=\"" +
               fmt_px(mt + ph) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + x + "\" y=\"" + fmt_px(mt + ph + 18.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               fmt(t) + "</text>\n";
    }
    const double eps_y = ya.tick * 1e-9;
    for (double t = ya.lo; t <= ya.hi + eps_y; t += ya.tick) {
        const std::string y = fmt_px(py(t));
        svg += "<line x1=\"" + fmt_px(ml) + "\" y1=\"" + y + "\" x2=\"" + fmt_px(ml + pw) +
               "\" y2=\"" + y + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt_px(ml - 6.0) + "\" y=\"" + fmt_px(py(t) + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + fmt(t) +
               "</text>\n";
    }

    // Frame and axis labels.
    svg += "<rect x=\"" + fmt_px(ml) + "\" y=\"" + fmt_px(mt) + "\" width=\"" + fmt_px(pw) +
           "\" height=\"" + fmt_px(ph) +
           "\" fill=\"none\" stroke=\"#303030\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt_px(ml + pw / 2.0) + "\" y=\"" + fmt_px(opts.height - 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           escape_xml(opts.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt_px(mt + ph / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " +
           fmt_px(mt + ph / 2.0) + ")\">" + escape_xml(opts.y_label) + "</text>\n";

    // Data polylines, clipped to the frame by construction of the axes.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.points.empty()) continue;
        const char* color = kPalette[i % kPaletteSize];
        std::string pts;
        for (const auto& [x, y] : s.points) {
            pts += fmt_px(px(x));
            pts += ',';
            pts += fmt_px(py(y));
            pts += ' ';
        }
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\"";
        if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
        svg += " points=\"" + pts + "\"/>\n";
    }

    // Legend, top-right inside the frame.
    const double lx = ml + pw - 150.0;
    double ly = mt + 12.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % kPaletteSize];
        svg += "<line x1=\"" + fmt_px(lx) + "\" y1=\"" + fmt_px(ly - 4.0) + "\" x2=\"" +
               fmt_px(lx + 26.0) + "\" y2=\"" + fmt_px(ly - 4.0) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\"";
        if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
        svg += "/>\n";
        svg += "<text x=\"" + fmt_px(lx + 32.0) + "\" y=\"" + fmt_px(ly) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape_xml(s.label) +
               "</text>\n";
        ly += 16.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace dilat
