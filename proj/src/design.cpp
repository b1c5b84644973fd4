#include "ccd/design.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ccd/format.hpp"

namespace ccd {

std::string_view to_string(PointClass cls) {
  switch (cls) {
    case PointClass::Factorial:
      return "factorial";
    case PointClass::Axial:
      return "axial";
    case PointClass::Center:
      return "center";
  }
  return "unknown";
}

PointClass parse_point_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "factorial" || lower == "f") return PointClass::Factorial;
  if (lower == "axial" || lower == "a") return PointClass::Axial;
  if (lower == "center" || lower == "centre" || lower == "c") {
    return PointClass::Center;
  }
  throw std::invalid_argument("unknown point class '" + std::string(text) +
                              "'");
}

Design::Design(int k, double alpha, std::vector<DesignPoint> points)
    : k_(k), alpha_(alpha), points_(std::move(points)) {
  if (k_ < 1) throw std::invalid_argument("design needs at least one factor");
  for (const auto& p : points_) {
    if (p.coords.size() != static_cast<std::size_t>(k_)) {
      throw std::invalid_argument("design point has wrong dimension");
    }
  }
}

std::size_t Design::count(PointClass cls) const {
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(),
                    [cls](const DesignPoint& p) { return p.cls == cls; }));
}

std::vector<std::size_t> Design::indices_of(PointClass cls) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].cls == cls) out.push_back(i);
  }
  return out;
}

Design gen_ccd(int k, double alpha, int n0) {
  if (k < 2) {
    throw std::invalid_argument("CCD requires k >= 2 (got " +
                                std::to_string(k) + ")");
  }
  // 2^k rows; k above ~20 is not a meaningful design anyway.
  if (k > 20) throw std::invalid_argument("k too large for a full factorial");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (n0 < 1) throw std::invalid_argument("n0 must be >= 1");

  const std::size_t nf = std::size_t{1} << k;
  std::vector<DesignPoint> pts;
  pts.reserve(nf + 2 * k + n0);

  for (std::size_t mask = 0; mask < nf; ++mask) {
    DesignPoint p{std::vector<double>(k), PointClass::Factorial};
    for (int j = 0; j < k; ++j) {
      const bool high = (mask >> (k - 1 - j)) & 1u;
      p.coords[j] = high ? 1.0 : -1.0;
    }
    pts.push_back(std::move(p));
  }
  for (int axis = 0; axis < k; ++axis) {
    for (double sign : {-1.0, 1.0}) {
      DesignPoint p{std::vector<double>(k, 0.0), PointClass::Axial};
      p.coords[axis] = sign * alpha;
      pts.push_back(std::move(p));
    }
  }
  for (int c = 0; c < n0; ++c) {
    pts.push_back({std::vector<double>(k, 0.0), PointClass::Center});
  }
  return Design(k, alpha, std::move(pts));
}

const DesignPoint& ProbePoints::get(PointClass cls) const {
  switch (cls) {
    case PointClass::Factorial:
      return factorial;
    case PointClass::Axial:
      return axial;
    case PointClass::Center:
      break;
  }
  return center;
}

ProbePoints canonical_probe_points(const Design& design) {
  const int k = design.k();
  ProbePoints probes{
      {std::vector<double>(k, 1.0), PointClass::Factorial},
      {std::vector<double>(k, 0.0), PointClass::Axial},
      {std::vector<double>(k, 0.0), PointClass::Center},
  };
  probes.axial.coords[0] = design.alpha();
  return probes;
}

std::size_t representative_index(const Design& design, PointClass cls) {
  for (std::size_t i = 0; i < design.n(); ++i) {
    if (design[i].cls == cls) return i;
  }
  throw std::invalid_argument("design has no " + std::string(to_string(cls)) +
                              " point");
}

void write_design_csv(std::ostream& out, const Design& design) {
  for (int j = 0; j < design.k(); ++j) out << 'x' << (j + 1) << ',';
  out << "class\n";
  for (const auto& p : design.points()) {
    for (double v : p.coords) out << format_double(v) << ',';
    out << to_string(p.cls) << '\n';
  }
}

}  // namespace ccd
