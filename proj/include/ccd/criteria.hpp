#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccd/design.hpp"
#include "ccd/numkernel.hpp"

namespace ccd {

enum class RegionShape { Cuboidal, Spherical };

// Region of interest: the cube [-a, a]^k or the ball of radius r.
struct Region {
  RegionShape shape = RegionShape::Cuboidal;
  double size = 1.0;  // half-width a or radius r

  static Region cube(double half_width);
  static Region sphere(double radius);

  bool contains(std::span<const double> x) const;
  std::string label() const;  // e.g. "cube(a=1)", "sphere(r=1.4142135623730951)"
};

inline constexpr double kDefaultGridStep = 0.1;

// Per-design prediction variance evaluator. Holds (X'X)^-1 and the SPV
// scale, which is the run count N unless overridden.
class VarianceModel {
 public:
  // Throws SingularMatrixError if X'X cannot be inverted.
  explicit VarianceModel(const Design& design,
                         std::optional<double> scale = std::nullopt);

  int k() const { return k_; }
  std::size_t p() const { return static_cast<std::size_t>(inv_.dim()); }
  double scale() const { return scale_; }
  const SymMatrix& inverse_information() const { return inv_; }

  // trace((X'X)^-1)
  double a_trace() const { return trace(inv_); }

  // scale * f(x)' (X'X)^-1 f(x)
  double spv(std::span<const double> x) const;

  // scale * trace((X'X)^-1 * moments)
  double v_avg(const SymMatrix& moments) const;

 private:
  int k_;
  double scale_;
  SymMatrix inv_;
};

double spv(const Design& design, std::span<const double> x);

struct GMax {
  double value = 0.0;
  std::vector<double> location;
};

// Max SPV over design points, the canonical probes, and a grid clipped to the
// region. Each axis takes the multiples of grid_step within [-a, a] plus the
// endpoints +-a, so the origin, the axes and the cube vertices are always on
// the grid and halving grid_step gives a superset.
GMax g_max(const Design& design, const Region& region,
           double grid_step = kDefaultGridStep);
GMax g_max(const VarianceModel& model, const Design& design,
           const Region& region, double grid_step = kDefaultGridStep);

// p / g_max
double g_efficiency(const Design& design, const Region& region,
                    double grid_step = kDefaultGridStep);

// Uniform-measure moments (1/K) int_R f(x) f(x)' dx for the quadratic model.
SymMatrix region_moments(const Region& region, int k);

// E[prod x_i^e_i] under the uniform distribution on the region.
double region_monomial_moment(const Region& region, std::span<const int> exponents);

double v_avg(const Design& design, const Region& region);

// n deterministic, well spread points on the sphere of the given radius in
// R^k (Kronecker sequence pushed through Box-Muller, then normalized).
std::vector<std::vector<double>> sphere_points(int k, double radius, int n);

// Population standard deviation of SPV over sphere_points(k, radius, n).
double rotatability_index(const Design& design, double radius, int n_samples);
double rotatability_index(const VarianceModel& model, double radius,
                          int n_samples);

struct CriteriaReport {
  double alpha = 0.0;
  std::size_t p = 0;
  double a_trace = 0.0;
  double spv_factorial = 0.0;
  double spv_axial = 0.0;
  double spv_center = 0.0;
  double g_max = 0.0;
  std::vector<double> g_max_location;
  double g_eff = 0.0;
  double v_avg_cuboidal = 0.0;
  double v_avg_spherical = 0.0;
  double rotatability_index = 0.0;

  double probe_max() const;
};

struct CriteriaOptions {
  std::optional<Region> g_region;       // default cube(a=1)
  double grid_step = kDefaultGridStep;
  std::optional<Region> cuboidal;       // default cube(a=1)
  std::optional<Region> spherical;      // default sphere(r=sqrt(k))
  double rotatability_radius = 1.0;
  int rotatability_samples = 200;
};

CriteriaReport evaluate_criteria(const Design& design,
                                 const CriteriaOptions& options = {});

}  // namespace ccd
