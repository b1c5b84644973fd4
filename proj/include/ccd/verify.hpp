#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccd/fixtures.hpp"
#include "ccd/missing.hpp"
#include "ccd/monte_carlo.hpp"

namespace ccd {

// A candidate reading of the unstated integration region behind the V
// columns.
struct RegionCandidate {
  std::string name;
  RegionShape shape = RegionShape::Cuboidal;
  bool size_is_alpha = false;  // size = alpha instead of a fixed value
  double size = 1.0;
  // Drop the x_i x_j block of the moments matrix. Not a region at all: a
  // diagnostic for tables built with an incomplete moments matrix.
  bool drop_interactions = false;

  Region region(double alpha) const;
  SymMatrix moments(int k, double alpha) const;
};

// cube(a=1), cube(a=alpha), sphere(r=1), sphere(r=alpha), then the
// diagnostic cube(a=1) without interaction moments.
const std::vector<RegionCandidate>& region_candidates();

// Max relative deviation allowed when matching a V column.
inline constexpr double kCalibrationTolerance = 0.02;

struct CalibrationResult {
  std::string table_id;
  std::vector<std::pair<std::string, double>> max_rel_dev;  // per candidate
  std::optional<RegionCandidate> matched;
};

// Compares the complete-design V cells of a "b" table against every candidate
// and picks the closest one within kCalibrationTolerance.
CalibrationResult calibrate_v_column(const FixtureTable& table,
                                     SpvScale scale = SpvScale::Residual);

struct CellCheck {
  std::string table_id;
  FixtureCell cell;
  double computed = 0.0;
  bool estimable = true;
  bool gated = true;
  bool pass = false;
  std::string note;

  double deviation() const { return computed - cell.value(); }
};

struct McCheck {
  std::string table_id;
  double alpha = 0.0;
  std::string region;
  double analytic = 0.0;
  McEstimate estimate;

  double rel_diff() const { return (estimate.mean - analytic) / analytic; }
};

struct VerifyOptions {
  SpvScale spv_scale = SpvScale::Residual;
  LossConvention loss_convention = LossConvention::Tabulated;
  long mc_samples = 200000;
  std::uint64_t seed = 20240601;
};

struct VerifyReport {
  std::vector<CellCheck> cells;
  std::vector<CalibrationResult> calibrations;
  std::vector<McCheck> mc_checks;
  VerifyOptions options;

  bool passed() const;
};

// Throws std::invalid_argument for an unknown table id.
VerifyReport run_verify(const std::vector<std::string>& table_ids,
                        const VerifyOptions& options = {});

void write_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace ccd
