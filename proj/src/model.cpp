#include "ccd/model.hpp"

#include <ostream>
#include <stdexcept>

#include "ccd/format.hpp"

namespace ccd {

std::size_t layout::interaction(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 0 || j >= k) {
    throw std::out_of_range("invalid interaction index");
  }
  // Pairs before row i: sum_{r<i} (k-1-r).
  const int before = i * (2 * k - i - 1) / 2;
  return static_cast<std::size_t>(1 + 2 * k + before + (j - i - 1));
}

Eigen::VectorXd expand_point(std::span<const double> x) {
  const int k = static_cast<int>(x.size());
  Eigen::VectorXd f(param_count(k));
  f[0] = 1.0;
  for (int i = 0; i < k; ++i) {
    f[1 + i] = x[i];
    f[1 + k + i] = x[i] * x[i];
  }
  std::size_t col = 1 + 2 * static_cast<std::size_t>(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) f[col++] = x[i] * x[j];
  }
  return f;
}

ModelMatrix model_matrix(const Design& design) {
  ModelMatrix x{design.k(),
                Eigen::MatrixXd(design.n(), param_count(design.k()))};
  for (std::size_t r = 0; r < design.n(); ++r) {
    x.rows.row(r) = expand_point(design[r].coords).transpose();
  }
  return x;
}

std::vector<std::string> column_names(int k) {
  std::vector<std::string> names{"1"};
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i) + "^2");
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      names.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
    }
  }
  return names;
}

void write_model_matrix_csv(std::ostream& out, const ModelMatrix& x) {
  const auto names = column_names(x.k);
  for (std::size_t c = 0; c < names.size(); ++c) {
    out << (c ? "," : "") << names[c];
  }
  out << '\n';
  for (Eigen::Index r = 0; r < x.rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.rows.cols(); ++c) {
      out << (c ? "," : "") << format_double(x.rows(r, c));
    }
    out << '\n';
  }
}

}  // namespace ccd
