#pragma once

#include <string_view>
#include <vector>

#include "ccd/missing.hpp"
#include "ccd/report_io.hpp"
#include "ccd/svg_chart.hpp"

namespace ccd {

enum class PlotMetric { Loss, ReG, ReV };

std::string_view to_string(PlotMetric m);
// "loss", "re_g", "re_v"; throws std::invalid_argument otherwise.
PlotMetric parse_plot_metric(std::string_view text);

// Curve of the metric against alpha, one series per missing class.
// Inestimable cells leave a gap in the line.
LineChart metric_chart(int k, const std::vector<LossReport>& reports, PlotMetric metric);

// The long-format rows behind metric_chart.
std::vector<LongRow> metric_rows(int k, const std::vector<LossReport>& reports,
                                 PlotMetric metric);

}  // namespace ccd
