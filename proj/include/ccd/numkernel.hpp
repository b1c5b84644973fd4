#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "ccd/model.hpp"

namespace ccd {

// Raised when a symmetric matrix has no usable inverse, which for an
// information matrix means the design can no longer estimate every
// coefficient.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense symmetric matrix. The constructor averages the input with its
// transpose, so entries (i, j) and (j, i) are bitwise equal afterwards.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Eigen::MatrixXd& m);

  static SymMatrix identity(Eigen::Index dim);
  static SymMatrix diagonal(const Eigen::VectorXd& d);

  Eigen::Index dim() const { return m_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Relative pivot threshold for invert(): a Cholesky pivot below
// kSingularTolerance * max|diag| is treated as zero.
inline constexpr double kSingularTolerance = 1e-12;

SymMatrix cross_product(const Eigen::MatrixXd& x);
SymMatrix cross_product(const ModelMatrix& x);

// Inverse via Cholesky factorization. Throws SingularMatrixError when the
// matrix is not numerically positive definite.
SymMatrix invert(const SymMatrix& m);

// f' m f. Throws std::invalid_argument on dimension mismatch.
double quad_form(const Eigen::VectorXd& f, const SymMatrix& m);

double trace(const SymMatrix& m);

// trace(X (X'X)^-1 X') as the sum of the hat-matrix diagonal h_ii.
double hat_trace(const ModelMatrix& x);

}  // namespace ccd
