#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccd/design.hpp"

namespace ccd {

// Columns of the embedded reference tables. The "a" tables carry the full-design
// A-trace and one loss per missing class; the "b" tables carry probe SPVs and
// the region-averaged variance per (alpha, missing class) row.
enum class FixtureColumn {
  ATrace,
  LossFactorial,
  LossAxial,
  LossCenter,
  SpvFactorial,
  SpvAxial,
  SpvCenter,
  VAvg,
};

std::string_view to_string(FixtureColumn column);

struct FixtureCell {
  double alpha = 0.0;
  std::optional<PointClass> missing;  // nullopt: complete design row
  FixtureColumn column = FixtureColumn::ATrace;
  std::string printed;  // value as printed, e.g. "0.4702906"

  double value() const;
  int decimals() const;
  // 1.5 units in the last printed digit.
  double tolerance() const;
};

struct FixtureTable {
  std::string id;  // "1a" .. "4b"
  int k = 0;
  int n0 = 4;
  std::vector<double> alphas;
  std::vector<FixtureCell> cells;

  bool is_loss_table() const { return !id.empty() && id.back() == 'a'; }
};

const std::vector<FixtureTable>& fixture_tables();

// Throws std::invalid_argument for an unknown id.
const FixtureTable& fixture_table(std::string_view id);

// The alpha grid tabulated for k (the "a" table rows). Empty if k is not
// one of 2..5.
std::vector<double> tabulated_alphas(int k);

// Cells whose printed value disagrees with every consistent reading of the
// computation. Returns the explanation, or nullopt for ordinary cells.
std::optional<std::string> fixture_annotation(std::string_view table_id,
                                              const FixtureCell& cell);

}  // namespace ccd
