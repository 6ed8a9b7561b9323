#include "cugan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace cugan {
namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

struct Bounds {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -std::numeric_limits<double>::infinity();
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();

    void include(double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y)) return;
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }

    void finalize() {
        if (x_min > x_max) { x_min = 0.0; x_max = 1.0; }
        if (y_min > y_max) { y_min = 0.0; y_max = 1.0; }
        if (x_min == x_max) { x_min -= 0.5; x_max += 0.5; }
        if (y_min == y_max) { y_min -= 0.5; y_max += 0.5; }
        const double xpad = (x_max - x_min) * 0.04;
        const double ypad = (y_max - y_min) * 0.06;
        x_min -= xpad; x_max += xpad;
        y_min -= ypad; y_max += ypad;
    }

    double px(double x) const {
        return kMarginLeft + (x - x_min) / (x_max - x_min) * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return kHeight - kMarginBottom -
               (y - y_min) / (y_max - y_min) * (kHeight - kMarginTop - kMarginBottom);
    }
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

void append_header(std::string& svg, const std::string& title) {
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
           std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           escape(title) + "</text>\n";
}

void append_axes(std::string& svg, const Bounds& b, const std::string& x_label,
                 const std::string& y_label) {
    svg += "<rect x=\"" + std::to_string(kMarginLeft) + "\" y=\"" + std::to_string(kMarginTop) +
           "\" width=\"" + std::to_string(kWidth - kMarginLeft - kMarginRight) +
           "\" height=\"" + std::to_string(kHeight - kMarginTop - kMarginBottom) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = b.x_min + (b.x_max - b.x_min) * i / 5.0;
        const double yv = b.y_min + (b.y_max - b.y_min) * i / 5.0;
        svg += "<text x=\"" + fmt("%.1f", b.px(xv)) + "\" y=\"" +
               std::to_string(kHeight - kMarginBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt("%.4g", xv) + "</text>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft - 8) + "\" y=\"" +
               fmt("%.1f", b.py(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt("%.4g", yv) + "</text>\n";
        svg += "<line x1=\"" + fmt("%.1f", b.px(xv)) + "\" y1=\"" +
               std::to_string(kHeight - kMarginBottom) + "\" x2=\"" + fmt("%.1f", b.px(xv)) +
               "\" y2=\"" + std::to_string(kMarginTop) +
               "\" stroke=\"#e0e0e0\" stroke-width=\"0.5\"/>\n";
        svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + fmt("%.1f", b.py(yv)) +
               "\" x2=\"" + std::to_string(kWidth - kMarginRight) + "\" y2=\"" +
               fmt("%.1f", b.py(yv)) + "\" stroke=\"#e0e0e0\" stroke-width=\"0.5\"/>\n";
    }
    svg += "<text x=\"" + std::to_string((kMarginLeft + kWidth - kMarginRight) / 2) + "\" y=\"" +
           std::to_string(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           escape(x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + std::to_string((kMarginTop + kHeight - kMarginBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
           std::to_string((kMarginTop + kHeight - kMarginBottom) / 2) + ")\">" +
           escape(y_label) + "</text>\n";
}

} // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<PlotSeries>& series,
                          std::optional<double> threshold_line) {
    Bounds b;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) b.include(x, y);
    }
    if (threshold_line) b.include(b.x_min, *threshold_line);
    b.finalize();

    std::string svg;
    append_header(svg, title);
    append_axes(svg, b, x_label, y_label);

    if (threshold_line && std::isfinite(*threshold_line)) {
        svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" +
               fmt("%.1f", b.py(*threshold_line)) + "\" x2=\"" +
               std::to_string(kWidth - kMarginRight) + "\" y2=\"" +
               fmt("%.1f", b.py(*threshold_line)) +
               "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }

    int legend_y = kMarginTop + 14;
    for (const auto& s : series) {
        std::string pts;
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            pts += fmt("%.2f", b.px(x)) + "," + fmt("%.2f", b.py(y)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.6\" points=\"" + pts + "\"/>\n";
        svg += "<line x1=\"" + std::to_string(kMarginLeft + 10) + "\" y1=\"" +
               std::to_string(legend_y - 4) + "\" x2=\"" + std::to_string(kMarginLeft + 34) +
               "\" y2=\"" + std::to_string(legend_y - 4) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft + 40) + "\" y=\"" +
               std::to_string(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) +
               "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

std::string svg_scatter_plot(const std::string& title,
                             const std::vector<ScatterSeries>& series) {
    Bounds b;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) b.include(x, y);
    }
    b.finalize();

    std::string svg;
    append_header(svg, title);
    append_axes(svg, b, "x", "y");

    int legend_y = kMarginTop + 14;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            svg += "<circle cx=\"" + fmt("%.2f", b.px(x)) + "\" cy=\"" + fmt("%.2f", b.py(y)) +
                   "\" r=\"" + fmt("%.1f", s.radius) + "\" fill=\"" + s.color +
                   "\" fill-opacity=\"0.55\"/>\n";
        }
        svg += "<circle cx=\"" + std::to_string(kMarginLeft + 16) + "\" cy=\"" +
               std::to_string(legend_y - 4) + "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft + 26) + "\" y=\"" +
               std::to_string(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) +
               "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace cugan
