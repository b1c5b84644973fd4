#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace ccd {

enum class PointClass { Factorial, Axial, Center };

inline constexpr std::array<PointClass, 3> kAllPointClasses = {
    PointClass::Factorial, PointClass::Axial, PointClass::Center};

std::string_view to_string(PointClass cls);

// Accepts "factorial", "axial", "center" (case-insensitive) and the
// single-letter forms f/a/c. Throws std::invalid_argument otherwise.
PointClass parse_point_class(std::string_view text);

struct DesignPoint {
  std::vector<double> coords;
  PointClass cls = PointClass::Center;

  bool operator==(const DesignPoint&) const = default;
};

// An ordered set of runs in coded units. Designs produced by gen_ccd are full
// central composite designs; designs produced by deleting rows keep k and
// alpha but no longer satisfy the full-CCD counts.
class Design {
 public:
  Design(int k, double alpha, std::vector<DesignPoint> points);

  int k() const { return k_; }
  double alpha() const { return alpha_; }
  std::size_t n() const { return points_.size(); }

  std::span<const DesignPoint> points() const { return points_; }
  const DesignPoint& operator[](std::size_t i) const { return points_[i]; }

  std::size_t count(PointClass cls) const;
  std::vector<std::size_t> indices_of(PointClass cls) const;

  bool operator==(const Design&) const = default;

 private:
  int k_;
  double alpha_;
  std::vector<DesignPoint> points_;
};

// Full CCD with canonical ordering: 2^k factorial points (lexicographic,
// -1 before +1, last factor fastest), then axial pairs (-alpha, +alpha) for
// axis 1..k, then n0 center points.
Design gen_ccd(int k, double alpha, int n0);

struct ProbePoints {
  DesignPoint factorial;  // (1, ..., 1)
  DesignPoint axial;      // (+alpha, 0, ..., 0)
  DesignPoint center;     // origin

  const DesignPoint& get(PointClass cls) const;
};

ProbePoints canonical_probe_points(const Design& design);

// Row index used as "the" deleted point of a class: its first row in
// canonical order. Throws std::invalid_argument if the class is absent.
std::size_t representative_index(const Design& design, PointClass cls);

// Header x1..xk,class then one row per point.
void write_design_csv(std::ostream& out, const Design& design);

}  // namespace ccd
