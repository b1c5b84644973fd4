#include "ccd/numkernel.hpp"

#include <cmath>
#include <string>

namespace ccd {

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("SymMatrix requires a square matrix");
  }
  const Eigen::Index n = m.rows();
  m_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m_(i, i) = m(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMatrix SymMatrix::identity(Eigen::Index dim) {
  return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& d) {
  return SymMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

SymMatrix cross_product(const Eigen::MatrixXd& x) {
  return SymMatrix(x.transpose() * x);
}

SymMatrix cross_product(const ModelMatrix& x) { return cross_product(x.rows); }

SymMatrix invert(const SymMatrix& m) {
  const Eigen::Index n = m.dim();
  const Eigen::MatrixXd& a = m.matrix();

  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
  const double floor = kSingularTolerance * scale;
  if (n == 0 || scale == 0.0) throw SingularMatrixError("zero matrix");

  // Lower-triangular L with a = L L'.
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j);
    for (Eigen::Index c = 0; c < j; ++c) d -= l(j, c) * l(j, c);
    if (!(d > floor)) {
      throw SingularMatrixError("information matrix is singular (pivot " +
                                std::to_string(j) + ")");
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (Eigen::Index c = 0; c < j; ++c) s -= l(i, c) * l(j, c);
      l(i, j) = s / ljj;
    }
  }

  // L^-1 by forward substitution, then a^-1 = L^-T L^-1.
  Eigen::MatrixXd linv = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    linv(j, j) = 1.0 / l(j, j);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (Eigen::Index c = j; c < i; ++c) s -= l(i, c) * linv(c, j);
      linv(i, j) = s / l(i, i);
    }
  }
  return SymMatrix(linv.transpose() * linv);
}

double quad_form(const Eigen::VectorXd& f, const SymMatrix& m) {
  if (f.size() != m.dim()) {
    throw std::invalid_argument("quad_form: vector length " +
                                std::to_string(f.size()) +
                                " does not match matrix dimension " +
                                std::to_string(m.dim()));
  }
  return f.dot(m.matrix() * f);
}

double trace(const SymMatrix& m) { return m.matrix().trace(); }

double hat_trace(const ModelMatrix& x) {
  const SymMatrix inv = invert(cross_product(x));
  double sum = 0.0;
  for (Eigen::Index r = 0; r < x.rows.rows(); ++r) {
    const Eigen::VectorXd row = x.rows.row(r).transpose();
    sum += quad_form(row, inv);
  }
  return sum;
}

}  // namespace ccd
