#include "ccd/criteria.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccd/format.hpp"
#include "ccd/model.hpp"

namespace ccd {

Region Region::cube(double half_width) {
  if (!(half_width > 0.0)) throw std::invalid_argument("cube half-width must be > 0");
  return {RegionShape::Cuboidal, half_width};
}

Region Region::sphere(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be > 0");
  return {RegionShape::Spherical, radius};
}

bool Region::contains(std::span<const double> x) const {
  // Relative slack so grid points on the boundary are kept.
  const double slack = 1e-12 * size;
  if (shape == RegionShape::Cuboidal) {
    for (double v : x) {
      if (std::abs(v) > size + slack) return false;
    }
    return true;
  }
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::sqrt(r2) <= size + slack;
}

std::string Region::label() const {
  return shape == RegionShape::Cuboidal ? "cube(a=" + format_double(size) + ")"
                                        : "sphere(r=" + format_double(size) + ")";
}

VarianceModel::VarianceModel(const Design& design, std::optional<double> scale)
    : k_(design.k()),
      scale_(scale.value_or(static_cast<double>(design.n()))),
      inv_(invert(cross_product(model_matrix(design)))) {}

double VarianceModel::spv(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != k_) {
    throw std::invalid_argument("spv: point dimension does not match design");
  }
  return scale_ * quad_form(expand_point(x), inv_);
}

double VarianceModel::v_avg(const SymMatrix& moments) const {
  if (moments.dim() != inv_.dim()) {
    throw std::invalid_argument("v_avg: moments matrix has wrong dimension");
  }
  return scale_ * inv_.matrix().cwiseProduct(moments.matrix()).sum();
}

double spv(const Design& design, std::span<const double> x) {
  return VarianceModel(design).spv(x);
}

namespace {

// Multiples of step inside [-a, a], plus the endpoints themselves. Anchoring
// at the origin keeps the axes on the grid, and halving the step can only add
// points.
std::vector<double> axis_grid(double half_width, double step) {
  const auto m = static_cast<long>(std::floor(half_width / step + 1e-9));
  std::vector<double> g;
  g.reserve(2 * m + 3);
  g.push_back(-half_width);
  for (long j = -m; j <= m; ++j) {
    const double t = static_cast<double>(j) * step;
    if (std::abs(t) < half_width - 1e-9 * half_width) g.push_back(t);
  }
  g.push_back(half_width);
  return g;
}

// SPV along the last coordinate is a quartic in t for a fixed prefix, so the
// grid scan costs O(p^2) per prefix instead of per point.
void scan_grid(const VarianceModel& model, const Region& region,
               double grid_step, GMax& best) {
  const int k = model.k();
  const auto& minv = model.inverse_information().matrix();
  const std::vector<double> g = axis_grid(region.size, grid_step);
  const std::size_t m = g.size();
  const int last = k - 1;
  const std::size_t sq_last = layout::square(k, last);
  const double r2_limit = region.size * region.size * (1.0 + 1e-12);

  std::vector<std::size_t> idx(static_cast<std::size_t>(last), 0);
  std::vector<double> x(k, 0.0);
  Eigen::VectorXd u(model.p());
  Eigen::VectorXd v(model.p());

  while (true) {
    double prefix_r2 = 0.0;
    for (int i = 0; i < last; ++i) {
      x[i] = g[idx[i]];
      prefix_r2 += x[i] * x[i];
    }
    bool feasible = true;
    if (region.shape == RegionShape::Spherical && prefix_r2 > r2_limit) {
      feasible = false;
    }
    if (feasible) {
      x[last] = 0.0;
      u = expand_point(x);
      v.setZero();
      v[layout::linear(k, last)] = 1.0;
      for (int i = 0; i < last; ++i) v[layout::interaction(k, i, last)] = x[i];
      const Eigen::VectorXd mu = minv * u;
      const Eigen::VectorXd mv = minv * v;
      const double c0 = u.dot(mu);
      const double c1 = 2.0 * u.dot(mv);
      const double c2 = v.dot(mv) + 2.0 * mu[sq_last];
      const double c3 = 2.0 * mv[sq_last];
      const double c4 = minv(sq_last, sq_last);
      for (std::size_t j = 0; j < m; ++j) {
        const double t = g[j];
        if (region.shape == RegionShape::Spherical &&
            prefix_r2 + t * t > r2_limit) {
          continue;
        }
        const double val =
            model.scale() * (c0 + t * (c1 + t * (c2 + t * (c3 + t * c4))));
        if (val > best.value) {
          best.value = val;
          best.location = x;
          best.location[last] = t;
        }
      }
    }
    int d = last - 1;
    while (d >= 0 && ++idx[d] == m) {
      idx[d] = 0;
      --d;
    }
    if (d < 0) break;
  }
}

}  // namespace

GMax g_max(const VarianceModel& model, const Design& design,
           const Region& region, double grid_step) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid_step must be > 0");
  GMax best{-1.0, {}};
  auto consider = [&](const std::vector<double>& x) {
    const double val = model.spv(x);
    if (val > best.value) {
      best.value = val;
      best.location = x;
    }
  };
  for (const auto& pt : design.points()) consider(pt.coords);
  const ProbePoints probes = canonical_probe_points(design);
  for (PointClass cls : kAllPointClasses) consider(probes.get(cls).coords);
  scan_grid(model, region, grid_step, best);
  // Report the direct evaluation at the arg-max, not the polynomial form.
  best.value = model.spv(best.location);
  return best;
}

GMax g_max(const Design& design, const Region& region, double grid_step) {
  return g_max(VarianceModel(design), design, region, grid_step);
}

double g_efficiency(const Design& design, const Region& region,
                    double grid_step) {
  const GMax gm = g_max(design, region, grid_step);
  return static_cast<double>(param_count(design.k())) / gm.value;
}

double region_monomial_moment(const Region& region,
                              std::span<const int> exponents) {
  int total = 0;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e % 2 != 0) return 0.0;
    total += e;
  }
  const double s = region.size;
  if (region.shape == RegionShape::Cuboidal) {
    double m = 1.0;
    for (int e : exponents) m *= std::pow(s, e) / (e + 1);
    return m;
  }
  // Ball: radial part k/(k+|e|) r^|e| times the uniform-sphere moment
  // Gamma(k/2) prod Gamma((e_i+1)/2) / (Gamma(1/2)^k Gamma((k+|e|)/2)).
  const double k = static_cast<double>(exponents.size());
  double log_sphere = std::lgamma(k / 2.0) - std::lgamma((k + total) / 2.0);
  for (int e : exponents) {
    log_sphere += std::lgamma((e + 1) / 2.0) - std::lgamma(0.5);
  }
  return k / (k + total) * std::pow(s, total) * std::exp(log_sphere);
}

namespace {

// Exponent vector of model column c.
std::vector<int> column_exponents(int k, std::size_t c) {
  std::vector<int> e(k, 0);
  if (c == 0) return e;
  if (c <= static_cast<std::size_t>(k)) {
    e[c - 1] = 1;
    return e;
  }
  if (c <= static_cast<std::size_t>(2 * k)) {
    e[c - k - 1] = 2;
    return e;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (layout::interaction(k, i, j) == c) {
        e[i] = 1;
        e[j] = 1;
        return e;
      }
    }
  }
  throw std::out_of_range("column index out of range");
}

}  // namespace

SymMatrix region_moments(const Region& region, int k) {
  const std::size_t p = param_count(k);
  std::vector<std::vector<int>> expo(p);
  for (std::size_t c = 0; c < p; ++c) expo[c] = column_exponents(k, c);

  Eigen::MatrixXd m(p, p);
  std::vector<int> sum(k);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      for (int i = 0; i < k; ++i) sum[i] = expo[a][i] + expo[b][i];
      m(a, b) = m(b, a) = region_monomial_moment(region, sum);
    }
  }
  return SymMatrix(m);
}

double v_avg(const Design& design, const Region& region) {
  return VarianceModel(design).v_avg(region_moments(region, design.k()));
}

std::vector<std::vector<double>> sphere_points(int k, double radius, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("sphere_points: bad size");
  const int pairs = (k + 1) / 2;
  const int dims = 2 * pairs;

  // Generalized golden ratio: the positive root of x^(d+1) = x + 1.
  double phi = 2.0;
  for (int it = 0; it < 200; ++it) phi = std::pow(1.0 + phi, 1.0 / (dims + 1));
  std::vector<double> step(dims);
  for (int d = 0; d < dims; ++d) step[d] = std::fmod(std::pow(1.0 / phi, d + 1), 1.0);

  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  std::vector<double> gauss(dims);
  for (int s = 1; s <= n; ++s) {
    for (int q = 0; q < pairs; ++q) {
      double u1 = std::fmod(0.5 + s * step[2 * q], 1.0);
      const double u2 = std::fmod(0.5 + s * step[2 * q + 1], 1.0);
      if (u1 <= 0.0) u1 = 0.5;
      const double rad = std::sqrt(-2.0 * std::log(u1));
      gauss[2 * q] = rad * std::cos(2.0 * std::numbers::pi * u2);
      gauss[2 * q + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
    }
    double norm = 0.0;
    for (int i = 0; i < k; ++i) norm += gauss[i] * gauss[i];
    norm = std::sqrt(norm);
    std::vector<double> x(k);
    for (int i = 0; i < k; ++i) x[i] = radius * gauss[i] / norm;
    pts.push_back(std::move(x));
  }
  return pts;
}

double rotatability_index(const VarianceModel& model, double radius,
                          int n_samples) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be > 0");
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");
  const auto pts = sphere_points(model.k(), radius, n_samples);
  std::vector<double> vals;
  vals.reserve(pts.size());
  double mean = 0.0;
  for (const auto& x : pts) {
    vals.push_back(model.spv(x));
    mean += vals.back();
  }
  mean /= static_cast<double>(vals.size());
  double ss = 0.0;
  for (double v : vals) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(vals.size()));
}

double rotatability_index(const Design& design, double radius, int n_samples) {
  return rotatability_index(VarianceModel(design), radius, n_samples);
}

double CriteriaReport::probe_max() const {
  return std::max({spv_factorial, spv_axial, spv_center});
}

CriteriaReport evaluate_criteria(const Design& design,
                                 const CriteriaOptions& options) {
  const VarianceModel model(design);
  const int k = design.k();
  const ProbePoints probes = canonical_probe_points(design);

  CriteriaReport r;
  r.alpha = design.alpha();
  r.p = model.p();
  r.a_trace = model.a_trace();
  r.spv_factorial = model.spv(probes.factorial.coords);
  r.spv_axial = model.spv(probes.axial.coords);
  r.spv_center = model.spv(probes.center.coords);

  const GMax gm = g_max(model, design, options.g_region.value_or(Region::cube(1.0)),
                        options.grid_step);
  r.g_max = gm.value;
  r.g_max_location = gm.location;
  r.g_eff = static_cast<double>(r.p) / gm.value;

  const Region cube = options.cuboidal.value_or(Region::cube(1.0));
  const Region ball =
      options.spherical.value_or(Region::sphere(std::sqrt(static_cast<double>(k))));
  r.v_avg_cuboidal = model.v_avg(region_moments(cube, k));
  r.v_avg_spherical = model.v_avg(region_moments(ball, k));
  r.rotatability_index = rotatability_index(model, options.rotatability_radius,
                                            options.rotatability_samples);
  return r;
}

}  // namespace ccd
