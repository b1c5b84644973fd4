#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccd/criteria.hpp"
#include "ccd/missing.hpp"

namespace ccd {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 2;
  int n0 = 4;
  std::vector<double> alphas;  // empty: the tabulated alpha grid for k
  RegionShape region_shape = RegionShape::Cuboidal;
  std::optional<double> region_size;  // default 1 (cube) or sqrt(k) (sphere)
  double grid_step = kDefaultGridStep;
  SpvScale spv_scale = SpvScale::Residual;
  LossConvention loss_convention = LossConvention::Tabulated;
  std::vector<PointClass> classes{kAllPointClasses.begin(), kAllPointClasses.end()};
  long mc_samples = 200000;
  std::uint64_t seed = 20240601;
  std::string out = ".";

  Region region() const;
  // alphas, or the tabulated grid for k when none were given.
  std::vector<double> effective_alphas() const;
  SweepConfig sweep_config() const;

  // Throws ConfigError.
  void validate() const;
};

// Keys: k, n0, alpha, alphas, region, region-size, grid-step, spv-scale,
// loss-convention, classes, mc-samples, seed, out. Underscores are accepted
// in place of dashes. Throws ConfigError on an unknown key or bad value.
void apply_config_entry(RunConfig& config, std::string_view key,
                        std::string_view value);

// Flat key=value lines; '#' starts a comment.
void apply_config_stream(RunConfig& config, std::istream& in);
void apply_config_file(RunConfig& config, const std::string& path);

// "1,1.21,2" or "start:stop:step" (inclusive of stop within step/1000).
std::vector<double> parse_alpha_list(std::string_view text);

}  // namespace ccd
