#include "ccd/missing.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "ccd/model.hpp"

namespace ccd {

std::string_view to_string(LossConvention c) {
  return c == LossConvention::Exact ? "exact" : "tabulated";
}

std::string_view to_string(SpvScale s) {
  return s == SpvScale::Residual ? "residual" : "full";
}

LossConvention parse_loss_convention(std::string_view text) {
  if (text == "exact") return LossConvention::Exact;
  if (text == "tabulated") return LossConvention::Tabulated;
  throw std::invalid_argument("loss convention must be exact|tabulated, got '" +
                              std::string(text) + "'");
}

SpvScale parse_spv_scale(std::string_view text) {
  if (text == "residual") return SpvScale::Residual;
  if (text == "full") return SpvScale::Full;
  throw std::invalid_argument("spv scale must be residual|full, got '" +
                              std::string(text) + "'");
}

Design delete_rows(const Design& design, std::span<const std::size_t> indices) {
  std::vector<bool> drop(design.n(), false);
  for (std::size_t i : indices) {
    if (i >= design.n()) {
      throw std::out_of_range("row index " + std::to_string(i) +
                              " out of range for design with " +
                              std::to_string(design.n()) + " rows");
    }
    if (drop[i]) {
      throw std::invalid_argument("duplicate row index " + std::to_string(i));
    }
    drop[i] = true;
  }
  std::vector<DesignPoint> kept;
  kept.reserve(design.n() - indices.size());
  for (std::size_t i = 0; i < design.n(); ++i) {
    if (!drop[i]) kept.push_back(design[i]);
  }
  return Design(design.k(), design.alpha(), std::move(kept));
}

MissingScenario make_scenario(const Design& base,
                              std::vector<std::size_t> indices) {
  Design residual = delete_rows(base, indices);
  std::optional<PointClass> cls;
  if (!indices.empty()) {
    cls = base[indices.front()].cls;
    for (std::size_t i : indices) {
      if (base[i].cls != *cls) {
        cls.reset();
        break;
      }
    }
  }
  return {base, std::move(indices), cls, std::move(residual)};
}

double increase_in_variance(const Design& full, const Design& residual) {
  return VarianceModel(residual).a_trace() - VarianceModel(full).a_trace();
}

double truncate_decimals(double value, int decimals) {
  const double f = std::pow(10.0, decimals);
  // The nudge keeps values like 0.9583 (stored as 0.958299999...) intact.
  return std::floor(value * f + 1e-9) / f;
}

namespace {

double loss_from_traces(double full_trace, double residual_trace,
                        LossConvention convention) {
  if (convention == LossConvention::Tabulated) {
    full_trace = truncate_decimals(full_trace, 4);
    residual_trace = truncate_decimals(residual_trace, 4);
  }
  return residual_trace / full_trace - 1.0;
}

}  // namespace

double loss_precision(const Design& full, const Design& residual,
                      LossConvention convention) {
  return loss_from_traces(VarianceModel(full).a_trace(),
                          VarianceModel(residual).a_trace(), convention);
}

VarianceModel residual_model(const Design& full, const Design& residual,
                             SpvScale scale) {
  if (scale == SpvScale::Full) {
    return VarianceModel(residual, static_cast<double>(full.n()));
  }
  return VarianceModel(residual);
}

double relative_g_efficiency(const Design& full, const Design& residual,
                             const Region& region, double grid_step,
                             SpvScale scale) {
  const GMax gf = g_max(VarianceModel(full), full, region, grid_step);
  const GMax gr =
      g_max(residual_model(full, residual, scale), residual, region, grid_step);
  return gf.value / gr.value;
}

double relative_v_efficiency(const Design& full, const Design& residual,
                             const Region& region, SpvScale scale) {
  const SymMatrix moments = region_moments(region, full.k());
  return VarianceModel(full).v_avg(moments) /
         residual_model(full, residual, scale).v_avg(moments);
}

const ScenarioMetrics* LossReport::cell(PointClass cls) const {
  for (const auto& c : cells) {
    if (c.missing == cls) return &c;
  }
  return nullptr;
}

ScenarioMetrics evaluate_scenario(const Design& full,
                                  const VarianceModel& full_model,
                                  double g_max_full, double v_avg_full,
                                  PointClass cls, const SweepConfig& config) {
  ScenarioMetrics m;
  m.missing = cls;
  m.deleted_index = representative_index(full, cls);
  const std::size_t idx[] = {m.deleted_index};
  const Design residual = delete_rows(full, idx);
  try {
    const VarianceModel model = residual_model(full, residual, config.spv_scale);
    const ProbePoints probes = canonical_probe_points(full);
    m.a_trace = model.a_trace();
    m.loss = loss_from_traces(full_model.a_trace(), m.a_trace,
                              config.loss_convention);
    m.spv_factorial = model.spv(probes.factorial.coords);
    m.spv_axial = model.spv(probes.axial.coords);
    m.spv_center = model.spv(probes.center.coords);
    m.g_max = g_max(model, residual, config.region, config.grid_step).value;
    m.v_avg = model.v_avg(region_moments(config.region, full.k()));
    m.re_g = g_max_full / m.g_max;
    m.re_v = v_avg_full / m.v_avg;
  } catch (const SingularMatrixError& e) {
    m.status = CellStatus::Inestimable;
    m.message = e.what();
  }
  return m;
}

namespace {

LossReport sweep_one(double alpha, const SweepConfig& config) {
  const Design full = gen_ccd(config.k, alpha, config.n0);
  const VarianceModel model(full);

  LossReport rep;
  rep.alpha = alpha;
  rep.a_full = model.a_trace();
  CriteriaOptions opts;
  opts.g_region = config.region;
  opts.grid_step = config.grid_step;
  rep.full = evaluate_criteria(full, opts);
  rep.g_max_full = rep.full.g_max;
  rep.v_avg_full = model.v_avg(region_moments(config.region, config.k));
  for (PointClass cls : config.classes) {
    rep.cells.push_back(evaluate_scenario(full, model, rep.g_max_full,
                                          rep.v_avg_full, cls, config));
  }
  return rep;
}

}  // namespace

std::vector<LossReport> scenario_sweep(const SweepConfig& config) {
  // Validate once up front so a bad k or n0 fails before any work.
  if (!config.alphas.empty()) gen_ccd(config.k, config.alphas.front(), config.n0);
  for (double a : config.alphas) {
    if (!(a > 0.0)) throw std::invalid_argument("alpha must be > 0");
  }

  std::vector<LossReport> out;
  out.reserve(config.alphas.size());
  if (!config.parallel) {
    for (double a : config.alphas) out.push_back(sweep_one(a, config));
    return out;
  }
  std::vector<std::future<LossReport>> jobs;
  jobs.reserve(config.alphas.size());
  for (double a : config.alphas) {
    jobs.push_back(std::async(std::launch::async, sweep_one, a, std::cref(config)));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace ccd
