#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccd/criteria.hpp"

namespace ccd {

// Uniform draw from the cube or ball.
std::vector<double> sample_region(const Region& region, int k, std::mt19937_64& rng);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

// Mean SPV over uniform samples of the region; an independent check on
// VarianceModel::v_avg.
McEstimate monte_carlo_v_avg(const VarianceModel& model, const Region& region,
                             long samples, std::uint64_t seed);

}  // namespace ccd
