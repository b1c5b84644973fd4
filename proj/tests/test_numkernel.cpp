#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ccd/design.hpp"
#include "ccd/missing.hpp"
#include "ccd/model.hpp"
#include "ccd/numkernel.hpp"

using namespace ccd;

namespace {

// Plain Gaussian elimination with partial pivoting, kept independent of the
// Cholesky path under test.
std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

std::vector<std::vector<double>> to_rows(const SymMatrix& m) {
  std::vector<std::vector<double>> out(m.dim(), std::vector<double>(m.dim()));
  for (Eigen::Index i = 0; i < m.dim(); ++i)
    for (Eigen::Index j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("cross product examples") {
  const SymMatrix m = cross_product(model_matrix(gen_ccd(2, 1.0, 4)));
  CHECK(m(0, 0) == 12.0);
  CHECK(m(1, 1) == doctest::Approx(6.0));
  CHECK(cross_product(model_matrix(gen_ccd(2, 2.0, 4)))(1, 1) == doctest::Approx(12.0));
}

TEST_CASE("cross product is additive over row blocks") {
  const ModelMatrix x = model_matrix(gen_ccd(3, 1.5, 4));
  const Eigen::Index half = x.rows.rows() / 2;
  const SymMatrix top = cross_product(Eigen::MatrixXd(x.rows.topRows(half)));
  const SymMatrix bottom =
      cross_product(Eigen::MatrixXd(x.rows.bottomRows(x.rows.rows() - half)));
  const SymMatrix whole = cross_product(x);
  CHECK((whole.matrix() - top.matrix() - bottom.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("invert examples") {
  CHECK(max_abs_diff(invert(SymMatrix::identity(6)), SymMatrix::identity(6)) == 0.0);

  Eigen::VectorXd d(2);
  d << 2, 4;
  const SymMatrix inv = invert(SymMatrix::diagonal(d));
  CHECK(inv(0, 0) == doctest::Approx(0.5));
  CHECK(inv(1, 1) == doctest::Approx(0.25));
  CHECK(inv(0, 1) == 0.0);

  const SymMatrix xtx = cross_product(model_matrix(gen_ccd(2, 1.0, 4)));
  CHECK(std::abs(trace(invert(xtx)) - 1.5416) < 1e-4);
}

TEST_CASE("trace examples") {
  CHECK(trace(SymMatrix::identity(10)) == 10.0);
  auto a_trace = [](int k, double a) {
    return trace(invert(cross_product(model_matrix(gen_ccd(k, a, 4)))));
  };
  CHECK(std::abs(a_trace(3, 1.0) - 1.9369) < 1e-4);
  CHECK(std::abs(a_trace(5, 3.0) - 0.5963) < 1e-4);
}

TEST_CASE("invert is an involution and a true inverse") {
  for (int k = 2; k <= 5; ++k) {
    const SymMatrix m = cross_product(model_matrix(gen_ccd(k, 1.7, 4)));
    const SymMatrix inv = invert(m);
    const Eigen::MatrixXd prod = m.matrix() * inv.matrix();
    CHECK((prod - Eigen::MatrixXd::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff() < 1e-10);
    const SymMatrix back = invert(inv);
    CHECK(max_abs_diff(back, m) / m.matrix().cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("quad_form agrees with a linear-solve oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 2; k <= 5; ++k) {
    const SymMatrix m = cross_product(model_matrix(gen_ccd(k, 1.3 + 0.2 * k, 4)));
    const SymMatrix inv = invert(m);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> x(k);
      for (auto& v : x) v = u(rng);
      const Eigen::VectorXd f = expand_point(x);
      const std::vector<double> fv(f.data(), f.data() + f.size());
      const std::vector<double> y = solve(to_rows(m), fv);
      double oracle = 0.0;
      for (std::size_t i = 0; i < fv.size(); ++i) oracle += fv[i] * y[i];
      CHECK(std::abs(quad_form(f, inv) - oracle) <= 1e-10 * std::max(1.0, oracle));
    }
  }
}

TEST_CASE("quad_form examples and errors") {
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(6);
  e1(0) = 1.0;
  CHECK(quad_form(e1, SymMatrix::identity(6)) == 1.0);

  const SymMatrix inv = invert(cross_product(model_matrix(gen_ccd(2, 1.0, 4))));
  const std::vector<double> origin{0, 0};
  CHECK(12.0 * quad_form(expand_point(origin), inv) == doctest::Approx(2.5).epsilon(1e-12));

  CHECK_THROWS_AS(quad_form(Eigen::VectorXd::Ones(5), inv), std::invalid_argument);
}

TEST_CASE("singular matrices are detected") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 1, 1, 1;
  CHECK_THROWS_AS(invert(SymMatrix(m)), SingularMatrixError);

  Eigen::MatrixXd neg(2, 2);
  neg << 1, 0, 0, -1;
  CHECK_THROWS_AS(invert(SymMatrix(neg)), SingularMatrixError);

  // Without the axial runs the x1^2 and x2^2 columns coincide.
  const Design d = gen_ccd(2, 1.0, 4);
  const std::vector<std::size_t> axial = d.indices_of(PointClass::Axial);
  CHECK_THROWS_AS(invert(cross_product(model_matrix(delete_rows(d, axial)))),
                  SingularMatrixError);
}

TEST_CASE("hat trace equals the parameter count") {
  CHECK(hat_trace(model_matrix(gen_ccd(2, 1.0, 4))) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(hat_trace(model_matrix(gen_ccd(2, 2.0, 4))) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(hat_trace(model_matrix(gen_ccd(4, 2.0, 4))) == doctest::Approx(15.0).epsilon(1e-12));
  const Design d = gen_ccd(3, 1.681, 4);
  const std::size_t idx[] = {3};
  CHECK(hat_trace(model_matrix(delete_rows(d, idx))) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("SymMatrix symmetrises its input") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 4, 3;
  const SymMatrix s(m);
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);
}
