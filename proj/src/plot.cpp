#include "ccd/plot.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "ccd/format.hpp"

namespace ccd {

namespace {

double ScenarioMetrics::*metric_field(PlotMetric m) {
  switch (m) {
    case PlotMetric::Loss:
      return &ScenarioMetrics::loss;
    case PlotMetric::ReG:
      return &ScenarioMetrics::re_g;
    case PlotMetric::ReV:
      return &ScenarioMetrics::re_v;
  }
  return &ScenarioMetrics::loss;
}

const char* series_color(PointClass c) {
  switch (c) {
    case PointClass::Factorial:
      return "#1f77b4";
    case PointClass::Axial:
      return "#d62728";
    case PointClass::Center:
      return "#2ca02c";
  }
  return "black";
}

}  // namespace

std::string_view to_string(PlotMetric m) {
  switch (m) {
    case PlotMetric::Loss:
      return "loss";
    case PlotMetric::ReG:
      return "re_g";
    case PlotMetric::ReV:
      return "re_v";
  }
  return "unknown";
}

PlotMetric parse_plot_metric(std::string_view text) {
  if (text == "loss") return PlotMetric::Loss;
  if (text == "re_g") return PlotMetric::ReG;
  if (text == "re_v") return PlotMetric::ReV;
  throw std::invalid_argument("metric must be loss|re_g|re_v, got '" +
                              std::string(text) + "'");
}

LineChart metric_chart(int k, const std::vector<LossReport>& reports,
                       PlotMetric metric) {
  LineChart chart;
  const std::string ks = std::to_string(k);
  switch (metric) {
    case PlotMetric::Loss:
      chart.title = "Loss in precision, single missing run, k = " + ks;
      chart.y_label = "relative increase of trace (X'X)^-1";
      break;
    case PlotMetric::ReG:
      chart.title = "Relative G-efficiency, single missing run, k = " + ks;
      chart.y_label = "max SPV full / max SPV residual";
      break;
    case PlotMetric::ReV:
      chart.title = "Relative V-efficiency, single missing run, k = " + ks;
      chart.y_label = "avg SPV full / avg SPV residual";
      break;
  }
  chart.x_label = "axial distance alpha";

  const auto field = metric_field(metric);
  std::vector<PointClass> classes;
  if (!reports.empty()) {
    for (const auto& c : reports.front().cells) classes.push_back(c.missing);
  }
  for (PointClass cls : classes) {
    ChartSeries s{"missing " + std::string(to_string(cls)), series_color(cls), {}};
    for (const auto& r : reports) {
      const ScenarioMetrics* m = r.cell(cls);
      const double y = (m && m->ok()) ? m->*field
                                      : std::numeric_limits<double>::quiet_NaN();
      s.points.emplace_back(r.alpha, y);
    }
    chart.series.push_back(std::move(s));
  }
  return chart;
}

std::vector<LongRow> metric_rows(int k, const std::vector<LossReport>& reports,
                                 PlotMetric metric) {
  std::vector<LongRow> rows;
  const auto field = metric_field(metric);
  for (const auto& r : reports) {
    for (const auto& m : r.cells) {
      rows.push_back({k, r.alpha, std::string(to_string(m.missing)),
                      std::string(to_string(metric)),
                      m.ok() ? format_double(m.*field) : "inestimable"});
    }
  }
  return rows;
}

}  // namespace ccd
