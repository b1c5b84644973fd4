#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ccd {

struct ChartSeries {
  std::string name;
  std::string color;  // any SVG colour, e.g. "#1f77b4"
  // (x, y) pairs; a non-finite y breaks the line.
  std::vector<std::pair<double, double>> points;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
  int width = 720;
  int height = 460;
};

// Tick positions covering [lo, hi] at a 1/2/5 x 10^n spacing.
std::vector<double> nice_ticks(double lo, double hi, int target_count = 6);

// Standalone SVG 1.1 document. Output depends only on the chart contents.
std::string render_svg(const LineChart& chart);

}  // namespace ccd
