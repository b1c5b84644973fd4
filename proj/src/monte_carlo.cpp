#include "ccd/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

namespace ccd {

std::vector<double> sample_region(const Region& region, int k, std::mt19937_64& rng) {
  std::vector<double> x(k);
  if (region.shape == RegionShape::Cuboidal) {
    std::uniform_real_distribution<double> u(-region.size, region.size);
    for (auto& v : x) v = u(rng);
    return x;
  }
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& v : x) {
      v = g(rng);
      norm += v * v;
    }
  } while (norm == 0.0);
  const double r = region.size * std::pow(u(rng), 1.0 / k) / std::sqrt(norm);
  for (auto& v : x) v *= r;
  return x;
}

McEstimate monte_carlo_v_avg(const VarianceModel& model, const Region& region,
                             long samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  std::mt19937_64 rng(seed);
  double sum = 0.0, sum2 = 0.0;
  for (long i = 0; i < samples; ++i) {
    const double v = model.spv(sample_region(region, model.k(), rng));
    sum += v;
    sum2 += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum2 / n - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n), samples, seed};
}

}  // namespace ccd
