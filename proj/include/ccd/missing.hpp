#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccd/criteria.hpp"
#include "ccd/design.hpp"

namespace ccd {

// How the A-traces enter the loss ratio.
//   Exact:     trace_r / trace_full - 1 in double precision.
//   Tabulated: both traces truncated to 4 decimals first, which is how the
//              reference loss tables were produced.
enum class LossConvention { Exact, Tabulated };

// SPV scale of a residual design: its own run count N - m, or the full N.
enum class SpvScale { Residual, Full };

std::string_view to_string(LossConvention c);
std::string_view to_string(SpvScale s);
LossConvention parse_loss_convention(std::string_view text);
SpvScale parse_spv_scale(std::string_view text);

// Removes the given rows. Throws std::out_of_range for an index >= n and
// std::invalid_argument for duplicates.
Design delete_rows(const Design& design, std::span<const std::size_t> indices);

struct MissingScenario {
  Design base;
  std::vector<std::size_t> deleted_indices;
  std::optional<PointClass> deleted_class;  // set when all deleted rows share a class
  Design residual;

  std::size_t residual_n() const { return residual.n(); }
};

MissingScenario make_scenario(const Design& base,
                              std::vector<std::size_t> indices);

// trace((X_r'X_r)^-1) - trace((X'X)^-1). SingularMatrixError from the
// residual means the coefficients are no longer estimable.
double increase_in_variance(const Design& full, const Design& residual);

double loss_precision(const Design& full, const Design& residual,
                      LossConvention convention = LossConvention::Exact);

double truncate_decimals(double value, int decimals);

// Residual-design evaluator with the chosen SPV scale.
VarianceModel residual_model(const Design& full, const Design& residual,
                             SpvScale scale);

double relative_g_efficiency(const Design& full, const Design& residual,
                             const Region& region,
                             double grid_step = kDefaultGridStep,
                             SpvScale scale = SpvScale::Residual);

double relative_v_efficiency(const Design& full, const Design& residual,
                             const Region& region,
                             SpvScale scale = SpvScale::Residual);

enum class CellStatus { Ok, Inestimable };

// One (alpha, deleted class) cell of a sweep.
struct ScenarioMetrics {
  PointClass missing = PointClass::Factorial;
  CellStatus status = CellStatus::Ok;
  std::string message;  // reason when not Ok
  std::size_t deleted_index = 0;
  double a_trace = 0.0;
  double loss = 0.0;
  double spv_factorial = 0.0;
  double spv_axial = 0.0;
  double spv_center = 0.0;
  double g_max = 0.0;
  double v_avg = 0.0;
  double re_g = 0.0;
  double re_v = 0.0;

  bool ok() const { return status == CellStatus::Ok; }
};

struct LossReport {
  double alpha = 0.0;
  double a_full = 0.0;
  CriteriaReport full;  // criteria of the complete design
  double g_max_full = 0.0;
  double v_avg_full = 0.0;  // under the sweep region
  std::vector<ScenarioMetrics> cells;  // in the requested class order

  const ScenarioMetrics* cell(PointClass cls) const;
};

struct SweepConfig {
  int k = 2;
  int n0 = 4;
  std::vector<double> alphas;
  std::vector<PointClass> classes{kAllPointClasses.begin(), kAllPointClasses.end()};
  Region region = Region::cube(1.0);
  double grid_step = kDefaultGridStep;
  SpvScale spv_scale = SpvScale::Residual;
  LossConvention loss_convention = LossConvention::Exact;
  bool parallel = true;
};

// Builds each full CCD, deletes one representative row per requested class,
// and collects loss and efficiency figures. Cells whose residual design is
// inestimable are marked instead of aborting the sweep. Output order follows
// `alphas` regardless of evaluation order.
std::vector<LossReport> scenario_sweep(const SweepConfig& config);

ScenarioMetrics evaluate_scenario(const Design& full, const VarianceModel& full_model,
                                  double g_max_full, double v_avg_full,
                                  PointClass cls, const SweepConfig& config);

}  // namespace ccd
