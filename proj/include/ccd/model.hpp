#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccd/design.hpp"

namespace ccd {

// Number of coefficients in the full quadratic model, (k+1)(k+2)/2.
constexpr std::size_t param_count(int k) {
  return static_cast<std::size_t>((k + 1) * (k + 2) / 2);
}

// Column layout of the quadratic model:
//   [1 | x1..xk | x1^2..xk^2 | x1x2, x1x3, ..., x(k-1)xk]
// Interactions are lexicographic in (i, j), i < j.
namespace layout {
inline constexpr std::size_t linear(int /*k*/, int i) { return 1 + i; }
inline constexpr std::size_t square(int k, int i) { return 1 + k + i; }
std::size_t interaction(int k, int i, int j);
}  // namespace layout

Eigen::VectorXd expand_point(std::span<const double> x);

struct ModelMatrix {
  int k = 0;
  Eigen::MatrixXd rows;  // n x p

  std::size_t n() const { return static_cast<std::size_t>(rows.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(rows.cols()); }
};

ModelMatrix model_matrix(const Design& design);

// "1", "x1", ..., "x1^2", ..., "x1*x2", ...
std::vector<std::string> column_names(int k);

void write_model_matrix_csv(std::ostream& out, const ModelMatrix& x);

}  // namespace ccd
