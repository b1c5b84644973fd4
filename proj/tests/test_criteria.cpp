#include <doctest.h>

#include <cmath>
#include <random>

#include "ccd/criteria.hpp"
#include "ccd/design.hpp"
#include "ccd/model.hpp"
#include "ccd/monte_carlo.hpp"

using namespace ccd;

namespace {

double within(double computed, double expected, double tol) {
  CHECK_MESSAGE(std::abs(computed - expected) <= tol,
                "computed ", computed, " expected ", expected, " +/- ", tol);
  return computed;
}

}  // namespace

TEST_CASE("spv examples") {
  within(spv(gen_ccd(2, 1.0, 4), std::vector<double>{1, 1}), 9.5, 5e-4);
  within(spv(gen_ccd(2, 2.0, 4), std::vector<double>{1, 1}), 6.0, 5e-4);
  within(spv(gen_ccd(3, 1.732, 4), std::vector<double>{0, 0, 0}), 4.499, 1.5e-3);
}

TEST_CASE("spv is N times the quadratic form") {
  const Design d = gen_ccd(3, 1.4, 3);
  const VarianceModel m(d);
  CHECK(m.scale() == 17.0);
  const std::vector<double> x{0.2, -0.5, 0.9};
  CHECK(m.spv(x) == doctest::Approx(17.0 * quad_form(expand_point(x), m.inverse_information())));
  const VarianceModel half(d, 8.5);
  CHECK(half.spv(x) == doctest::Approx(m.spv(x) / 2));
}

TEST_CASE("g_max examples") {
  const GMax g1 = g_max(gen_ccd(2, 1.0, 4), Region::cube(1.0));
  within(g1.value, 9.5, 5e-4);
  CHECK(std::abs(g1.location[0]) == 1.0);
  CHECK(std::abs(g1.location[1]) == 1.0);

  const GMax g2 = g_max(gen_ccd(2, 2.0, 4), Region::cube(1.0));
  within(g2.value, 9.5, 5e-4);
  CHECK(std::abs(g2.location[0]) + std::abs(g2.location[1]) == 2.0);
  CHECK(g2.location[0] * g2.location[1] == 0.0);

  // Rotatable: factorial and axial probes coincide.
  const Design r = gen_ccd(2, std::sqrt(2.0), 4);
  const ProbePoints p = canonical_probe_points(r);
  CHECK(spv(r, p.factorial.coords) == doctest::Approx(spv(r, p.axial.coords)));
  within(spv(gen_ccd(2, 1.414, 4), p.factorial.coords), 7.5, 1.5e-3);
}

TEST_CASE("g_max never decreases when the grid is refined") {
  for (int k = 2; k <= 3; ++k) {
    for (double a : {1.0, 1.5, 2.0}) {
      const Design d = gen_ccd(k, a, 4);
      for (const Region reg : {Region::cube(1.0), Region::sphere(std::sqrt(k))}) {
        double prev = 0.0;
        for (double step : {0.5, 0.25, 0.125, 0.0625}) {
          const double v = g_max(d, reg, step).value;
          CHECK(v >= prev);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("g_max is at least every in-region spv sample") {
  const Design d = gen_ccd(3, 1.3, 4);
  const Region reg = Region::cube(1.0);
  const double gm = g_max(d, reg, 0.1).value;
  std::mt19937_64 rng(11);
  const VarianceModel m(d);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) worst = std::max(worst, m.spv(sample_region(reg, 3, rng)));
  CHECK(worst <= gm * (1 + 1e-2));
}

TEST_CASE("g_efficiency examples") {
  within(g_efficiency(gen_ccd(2, 1.0, 4), Region::cube(1.0)), 0.6316, 1e-4);
  within(g_efficiency(gen_ccd(3, 1.0, 4), Region::cube(1.0)), 0.6997, 1e-4);
  CHECK(g_efficiency(gen_ccd(4, 2.0, 4), Region::cube(1.0)) <= 1.0);
}

TEST_CASE("region moment closed forms") {
  const SymMatrix c = region_moments(Region::cube(1.0), 2);
  CHECK(c(0, 0) == doctest::Approx(1.0));
  CHECK(c(0, layout::square(2, 0)) == doctest::Approx(1.0 / 3));
  CHECK(c(layout::square(2, 0), layout::square(2, 0)) == doctest::Approx(0.2));
  CHECK(c(layout::square(2, 0), layout::square(2, 1)) == doctest::Approx(1.0 / 9));
  CHECK(c(0, layout::linear(2, 0)) == 0.0);

  const SymMatrix s = region_moments(Region::sphere(1.0), 2);
  CHECK(s(layout::square(2, 0), layout::square(2, 0)) == doctest::Approx(0.125));
  CHECK(s(0, layout::square(2, 0)) == doctest::Approx(0.25));

  // Scaling: E[x^2] on [-a, a] is a^2/3; on the ball E|x|^2 = k r^2/(k+2).
  CHECK(region_moments(Region::cube(2.0), 3)(0, layout::square(3, 1)) == doctest::Approx(4.0 / 3));
  const SymMatrix b = region_moments(Region::sphere(2.0), 4);
  double r2 = 0.0;
  for (int i = 0; i < 4; ++i) r2 += b(0, layout::square(4, i));
  CHECK(r2 == doctest::Approx(4.0 * 4.0 / 6.0));
}

TEST_CASE("v_avg equals p when the moments are the design's own") {
  for (int k = 2; k <= 5; ++k) {
    const Design d = gen_ccd(k, 1.8, 4);
    const VarianceModel m(d);
    const SymMatrix own(cross_product(model_matrix(d)).matrix() / static_cast<double>(d.n()));
    CHECK(m.v_avg(own) == doctest::Approx(static_cast<double>(param_count(k))));
  }
}

TEST_CASE("v_avg examples") {
  within(v_avg(gen_ccd(2, 1.0, 4), Region::cube(1.0)), 3.633, 1.5e-3);
  within(v_avg(gen_ccd(3, 2.0, 4), Region::cube(1.0)), 4.344, 1.5e-3);
}

TEST_CASE("v_avg agrees with a Monte-Carlo mean of spv") {
  const Design d = gen_ccd(3, 1.681, 4);
  const VarianceModel m(d);
  for (const Region reg : {Region::cube(1.0), Region::sphere(1.5)}) {
    const McEstimate mc = monte_carlo_v_avg(m, reg, 100000, 20240601);
    CHECK(std::abs(mc.mean - m.v_avg(region_moments(reg, 3))) < 4 * mc.std_error);
  }
}

TEST_CASE("sphere points lie on the sphere and are deterministic") {
  const auto pts = sphere_points(4, 1.7, 50);
  REQUIRE(pts.size() == 50);
  for (const auto& p : pts) {
    double r2 = 0;
    for (double v : p) r2 += v * v;
    CHECK(std::sqrt(r2) == doctest::Approx(1.7));
  }
  CHECK(pts == sphere_points(4, 1.7, 50));
}

TEST_CASE("rotatability index") {
  for (int k = 2; k <= 5; ++k) {
    CHECK(rotatability_index(gen_ccd(k, std::pow(2.0, k / 4.0), 4), 1.0, 200) < 1e-6);
  }
  CHECK(rotatability_index(gen_ccd(2, 1.414, 4), 1.0, 200) < 1e-3);
  CHECK(rotatability_index(gen_ccd(3, 1.681, 4), 1.2, 200) < 1e-3);
  CHECK(rotatability_index(gen_ccd(2, 1.0, 4), 1.0, 200) > 0.1);
}

TEST_CASE("evaluate_criteria is consistent with the single functions") {
  const Design d = gen_ccd(2, 1.0, 4);
  const CriteriaReport r = evaluate_criteria(d);
  CHECK(r.p == 6);
  within(r.a_trace, 1.5416, 1e-4);
  within(r.spv_factorial, 9.5, 5e-4);
  within(r.spv_center, 2.5, 5e-4);
  CHECK(r.g_max == doctest::Approx(g_max(d, Region::cube(1.0)).value));
  CHECK(r.g_eff == doctest::Approx(6.0 / r.g_max));
  CHECK(r.v_avg_cuboidal == doctest::Approx(v_avg(d, Region::cube(1.0))));
  CHECK(r.v_avg_spherical == doctest::Approx(v_avg(d, Region::sphere(std::sqrt(2.0)))));
  CHECK(r.probe_max() == doctest::Approx(r.spv_factorial));
}

TEST_CASE("region containment and labels") {
  CHECK(Region::cube(1.0).contains(std::vector<double>{1.0, -1.0}));
  CHECK_FALSE(Region::cube(1.0).contains(std::vector<double>{1.01, 0.0}));
  CHECK(Region::sphere(1.0).contains(std::vector<double>{0.6, 0.8}));
  CHECK_FALSE(Region::sphere(1.0).contains(std::vector<double>{0.8, 0.8}));
  CHECK(Region::cube(1.0).label() == "cube(a=1)");
}
