#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ccd/design.hpp"

using namespace ccd;

TEST_CASE("gen_ccd sizes and class counts") {
  const Design d = gen_ccd(2, 1.0, 4);
  CHECK(d.n() == 12);
  CHECK(d.count(PointClass::Factorial) == 4);
  CHECK(d.count(PointClass::Axial) == 4);
  CHECK(d.count(PointClass::Center) == 4);

  CHECK(gen_ccd(3, 1.681, 4).n() == 18);
  CHECK(gen_ccd(4, 2.0, 4).n() == 28);
  CHECK(gen_ccd(5, 2.378, 4).n() == 46);
  for (int k = 2; k <= 8; ++k) {
    CHECK(gen_ccd(k, 1.5, 3).n() == (1u << k) + 2u * k + 3u);
  }
}

TEST_CASE("gen_ccd canonical ordering") {
  const Design d = gen_ccd(2, 1.414, 1);
  REQUIRE(d.n() == 9);
  CHECK(d[0].coords == std::vector<double>{-1, -1});
  CHECK(d[1].coords == std::vector<double>{-1, 1});
  CHECK(d[2].coords == std::vector<double>{1, -1});
  CHECK(d[3].coords == std::vector<double>{1, 1});
  CHECK(d[4].coords == std::vector<double>{-1.414, 0});
  CHECK(d[5].coords == std::vector<double>{1.414, 0});
  CHECK(d[6].coords == std::vector<double>{0, -1.414});
  CHECK(d[7].coords == std::vector<double>{0, 1.414});
  CHECK(d[8].coords == std::vector<double>{0, 0});
  CHECK(d[4].cls == PointClass::Axial);
  CHECK(d[8].cls == PointClass::Center);
}

TEST_CASE("gen_ccd rejects bad arguments") {
  CHECK_THROWS_AS(gen_ccd(1, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(gen_ccd(2, 0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(gen_ccd(2, -1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(gen_ccd(2, 1.0, 0), std::invalid_argument);
}

TEST_CASE("design moments: odd sums vanish, second moments are 2^k + 2 alpha^2") {
  for (int k = 2; k <= 5; ++k) {
    for (double a : {1.0, 1.21, 2.0, 3.0}) {
      const Design d = gen_ccd(k, a, 4);
      for (int i = 0; i < k; ++i) {
        double s1 = 0, s2 = 0, s3 = 0;
        for (const auto& pt : d.points()) {
          s1 += pt.coords[i];
          s2 += pt.coords[i] * pt.coords[i];
          s3 += std::pow(pt.coords[i], 3);
        }
        CHECK(s1 == doctest::Approx(0.0));
        CHECK(s3 == doctest::Approx(0.0));
        CHECK(s2 == doctest::Approx(std::pow(2.0, k) + 2 * a * a));
        for (int j = i + 1; j < k; ++j) {
          double sij = 0;
          for (const auto& pt : d.points()) sij += pt.coords[i] * pt.coords[j];
          CHECK(sij == doctest::Approx(0.0));
        }
      }
    }
  }
}

TEST_CASE("gen_ccd is deterministic") {
  CHECK(gen_ccd(4, 2.0, 4) == gen_ccd(4, 2.0, 4));
  CHECK_FALSE(gen_ccd(4, 2.0, 4) == gen_ccd(4, 2.0, 3));
}

TEST_CASE("canonical probe points") {
  const ProbePoints p2 = canonical_probe_points(gen_ccd(2, 2.0, 4));
  CHECK(p2.factorial.coords == std::vector<double>{1, 1});
  CHECK(p2.axial.coords == std::vector<double>{2, 0});
  CHECK(p2.center.coords == std::vector<double>{0, 0});

  const ProbePoints p3 = canonical_probe_points(gen_ccd(3, 1.732, 4));
  CHECK(p3.axial.coords == std::vector<double>{1.732, 0, 0});
  CHECK(p3.get(PointClass::Center).coords == std::vector<double>{0, 0, 0});

  const ProbePoints p4 = canonical_probe_points(gen_ccd(4, 2.0, 4));
  CHECK(p4.factorial.coords == std::vector<double>(4, 1.0));
}

TEST_CASE("representative index is the first row of the class") {
  const Design d = gen_ccd(3, 1.5, 2);
  CHECK(representative_index(d, PointClass::Factorial) == 0);
  CHECK(representative_index(d, PointClass::Axial) == 8);
  CHECK(representative_index(d, PointClass::Center) == 14);
}

TEST_CASE("point class names") {
  CHECK(parse_point_class("f") == PointClass::Factorial);
  CHECK(parse_point_class("Axial") == PointClass::Axial);
  CHECK(parse_point_class("center") == PointClass::Center);
  CHECK_THROWS_AS(parse_point_class("corner"), std::invalid_argument);
  for (PointClass c : kAllPointClasses) CHECK(parse_point_class(to_string(c)) == c);
}

TEST_CASE("design csv") {
  std::ostringstream s;
  write_design_csv(s, gen_ccd(2, 1.5, 1));
  const std::string text = s.str();
  CHECK(text.rfind("x1,x2,class\n", 0) == 0);
  CHECK(text.find("1.5,0,axial") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
}
