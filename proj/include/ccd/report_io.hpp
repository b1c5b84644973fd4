#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ccd/criteria.hpp"
#include "ccd/missing.hpp"

namespace ccd {

// RFC-4180 field: quoted when it contains a comma, quote, or line break.
std::string csv_field(std::string_view text);

// Splits one CSV record, honouring quoted fields.
std::vector<std::string> parse_csv_record(std::string_view line);

// Header: alpha,a_trace,spv_factorial,spv_axial,spv_center,g_max,
// g_max_location,g_eff,v_avg_cuboidal,v_avg_spherical,rotatability_index.
// The location is written as ';'-separated coordinates.
void write_criteria_csv(std::ostream& out, const std::vector<CriteriaReport>& reports);

// JSON array, one object per design, same field names as the CSV.
void write_criteria_json(std::ostream& out, const std::vector<CriteriaReport>& reports);

// Wide loss table laid out like the reference loss tables, extended with the
// relative G and V efficiencies:
// alpha,a_trace,loss_<cls>...,re_g_<cls>...,re_v_<cls>...
// Inestimable cells hold the word "inestimable".
void write_loss_csv(std::ostream& out, const std::vector<LossReport>& reports);

// One row per (alpha, missing) with probe SPVs, region average and G max:
// alpha,missing,spv_factorial,spv_axial,spv_center,v_avg,g_max
void write_spv_csv(std::ostream& out, const std::vector<LossReport>& reports);

struct LongRow {
  int k = 0;
  double alpha = 0.0;
  std::string missing_class;  // "none", "factorial", "axial", "center"
  std::string metric;
  std::string value;  // number or "inestimable"

  bool operator==(const LongRow&) const = default;
};

inline constexpr std::string_view kLongHeader = "k,alpha,missing_class,metric,value";

std::vector<LongRow> long_rows(int k, const std::vector<LossReport>& reports);
void write_long_csv(std::ostream& out, const std::vector<LongRow>& rows);
// Throws std::invalid_argument on a malformed file.
std::vector<LongRow> read_long_csv(std::istream& in);

}  // namespace ccd
