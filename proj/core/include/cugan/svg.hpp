#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cugan {

/// Dependency-free SVG plots with deterministic byte output, so emitted
/// figures are diffable and reproducible from the CSVs alone.

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

struct ScatterSeries {
    std::string label;
    std::string color;
    double radius = 1.5;
    std::vector<std::pair<double, double>> points;
};

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<PlotSeries>& series,
                          std::optional<double> threshold_line = std::nullopt);

std::string svg_scatter_plot(const std::string& title,
                             const std::vector<ScatterSeries>& series);

} // namespace cugan
