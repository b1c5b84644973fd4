#include "ccd/fixtures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ccd/format.hpp"

namespace ccd {

namespace {

// Tables 1a-4a: alpha, A-trace, loss (factorial, axial, center).
// Tables 1b-4b: alpha, missing class, SPV at factorial/axial/center probe, V.
// Values are copied exactly as printed; precision varies by cell.
constexpr const char* kFixtureText = R"(
table 1a
  1.000 1.5416 0.4702906 0.2072522 0.06117
  1.210 1.2440 0.3397106 0.1685691 0.098553
  1.414 1.0626 0.2550348 0.176454 0.117636
  1.500 0.9967 0.2362797 0.1902278 0.118491
  2.000 0.7187 0.2319466 0.3015166 0.090024
table 1b
  1.000 none 9.500 6.000 2.500 3.633
  1.000 factorial 9.533 5.866 2.383 4.913
  1.000 axial 8.861 6.111 2.444 3.931
  1.000 center 8.732 5.596 2.894 3.586
  1.21 none 8.464 6.669 2.866 3.318
  1.21 factorial 8.370 6.252 2.661 3.930
  1.21 axial 9.819 6.712 2.670 3.535
  1.21 center 7.772 6.139 3.451 3.410
  1.414 none 7.500 7.499 2.999 3.166
  1.414 factorial 7.334 6.952 2.749 3.483
  1.414 axial 6.954 7.332 2.749 3.361
  1.414 center 6.875 6.8741 3.666 3.351
  1.5 none 7.159 7.861 2.979 3.109
  1.5 factorial 6.995 7.283 2.737 3.364
  1.5 axial 6.652 7.710 2.737 3.311
  1.5 center 6.566 7.209 3.633 3.312
  2.00 none 6.000 9.500 2.500 2.766
  2.00 factorial 6.111 8.861 2.444 2.943
  2.00 axial 5.866 9.533 2.383 3.098
  2.00 center 5.596 8.732 2.894 2.931
table 2a
  1.000 1.9369 0.2111622 0.1953637 0.021116
  1.210 1.4227 0.233078 0.1447951 0.044071
  1.681 1.0814 0.1827261 0.088034 0.103292
  1.732 1.0575 0.1780615 0.088227 0.105059
  2.000 0.9333 0.1692918 0.1031823 0.094718
  2.250 0.8322 0.1760394 0.1237683 0.07366
  2.500 0.7549 0.1855875 0.1413432 0.056431
  3.000 0.6572 0.1982654 0.1653987 0.037279
table 2b
  1.000 none 14.292 9.085 2.785 5.607
  1.000 factorial 16.606 9.060 2.677 6.647
  1.000 axial 13.698 11.769 2.942 6.098
  1.000 center 13.510 8.763 3.112 5.497
  1.21 none 13.685 9.502 3.374 4.817
  1.21 factorial 16.091 9.341 3.249 5.575
  1.21 axial 13.111 11.409 3.425 5.110
  1.681 none 12.059 10.929 4.486 4.543
  1.681 factorial 14.124 10.465 4.239 4.868
  1.681 axial 11.509 11.938 4.240 4.632
  1.681 center 11.390 10.324 5.643 4.944
  1.732 none 11.893 11.142 4.499 4.527
  1.732 factorial 13.932 10.660 4.249 4.828
  1.732 axial 11.354 12.142 4.249 4.609
  1.732 center 11.285 10.562 5.663 4.948
  2.00 none 11.175 12.300 4.200 4.344
  2.00 factorial 13.263 11.769 4.016 4.590
  2.00 axial 10.736 13.421 4.026 4.448
  2.00 center 10.578 11.641 5.173 4.745
  2.25 none 10.729 13.247 3.670 4.078
  2.25 factorial 13.089 12.713 3.601 4.332
  2.25 axial 10.442 14.536 3.594 4.247
  2.25 center 10.201 12.554 4.354 4.377
  2.50 none 10.416 13.989 3.183 3.811
  2.50 factorial 13.138 13.461 3.205 4.081
  2.50 axial 10.309 15.350 3.160 4.042
  2.50 center 9.940 13.253 3.652 4.018
  3.00 none 9.972 15.012 2.536 3.392
  3.00 factorial 13.401 14.474 2.650 3.678
  3.00 axial 10.213 16.235 2.530 3.713
  3.00 center 9.550 14.204 2.788 3.497
table 3a
  1.000 2.2675 0.0480706 0.1753032 0.009261
  1.210 1.4871 0.0689933 0.1374487 0.020846
  2.000 0.9583 0.0771157 0.047793 0.108734
  2.250 0.8747 0.0784269 0.0533897 0.09649
  2.500 0.7866 0.0845411 0.0652174 0.069286
  3.000 0.6602 0.0960315 0.0802787 0.033475
table 3b
  1.000 none 18.446 13.932 3.347 7.477
  1.000 factorial 21.424 13.619 3.237 7.559
  1.000 axial 17.913 21.461 3.634 8.365
  1.000 center 17.791 13.666 3.666 7.400
  1.21 none 18.104 14.294 3.992 5.628
  1.21 factorial 21.289 13.988 3.868 5.728
  1.21 axial 17.605 20.769 4.245 6.140
  1.21 center 17.465 14.010 4.489 5.699
  2.00 none 16.333 16.333 7.000 5.211
  2.00 factorial 19.800 15.862 6.750 5.190
  2.00 axial 15.862 19.800 6.750 5.257
  2.00 center 15.750 15.750 9.000 6.075
  2.25 none 15.815 17.623 6.491 4.983
  2.25 factorial 19.400 17.122 6.288 4.971
  2.25 axial 15.400 21.255 6.344 5.048
  2.25 center 15.266 17.035 8.148 5.759
  2.50 none 15.431 18.913 5.447 4.512
  2.50 factorial 19.278 18.410 5.342 4.535
  2.50 axial 15.118 22.907 5.455 4.651
  2.50 center 14.929 18.319 6.521 5.050
  3.00 none 14.878 20.885 3.713 3.613
  3.00 factorial 19.398 20.399 3.741 3.684
  3.00 axial 14.825 25.121 3.815 3.855
  3.00 center 14.434 20.208 4.128 3.838
table 4a
  1.000 2.5839 0.0109137 0.1580557 0.004915
  1.500 1.0301 0.0260169 0.0940685 0.029803
  2.236 0.8163 0.0285434 0.0292785 0.122504
  2.378 0.7828 0.029254 0.0297649 0.117782
  2.500 0.7460 0.0302949 0.033378 0.104155
  2.750 0.6646 0.0341559 0.0430334 0.068914
  3.000 0.5963 0.0379004 0.0489686 0.042428
table 4b
  1.000 none 22.570 22.592 4.456 12.587
  1.000 factorial 25.492 22.165 4.362 12.447
  1.000 axial 22.144 38.628 4.878 14.157
  1.000 center 22.080 22.393 4.827 12.520
  1.500 none 22.063 23.307 6.720 6.801
  1.500 factorial 25.242 22.897 6.583 6.764
  1.500 axial 21.685 36.209 7.095 7.288
  1.500 center 21.590 23.101 7.698 7.140
  2.236 none 20.946 24.971 11.499 7.609
  2.236 factorial 24.391 24.499 11.249 7.527
  2.236 axial 20.576 33.571 11.249 7.614
  2.236 center 20.491 24.428 14.999 9.177
  2.378 none 20.724 25.817 11.158 7.468
  2.378 factorial 24.225 25.331 10.9208 7.392
  2.378 axial 20.369 34.493 10.968 7.475
  2.378 center 20.278 25.286 14.411 8.969
  2.500 none 20.554 26.663 10.407 7.152
  2.500 factorial 24.120 26.169 10.199 7.089
  2.500 axial 20.219 35.637 10.335 7.197
  2.500 center 20.120 26.167 13.158 8.454
  2.75 none 20.259 28.442 8.315 6.223
  2.75 factorial 24.008 27.942 8.187 6.195
  2.75 axial 19.993 38.248 8.479 6.371
  2.75 center 19.855 27.984 9.930 7.026
  3.00 none 20.009 30.006 6.406 5.314
  3.00 factorial 23.972 29.511 6.344 5.315
  3.00 axial 19.830 40.414 6.664 5.524
  3.00 center 19.625 29.514 7.281 5.767
)";

struct Annotation {
  const char* table;
  double alpha;
  PointClass missing;
  FixtureColumn column;
  const char* note;
};

constexpr Annotation kAnnotations[] = {
    {"1b", 1.21, PointClass::Axial, FixtureColumn::SpvFactorial,
     "printed 9.819 matches no probe of the residual design (computed 7.850); "
     "it is close to the largest factorial-point SPV, 9.820"},
    {"1b", 1.21, PointClass::Axial, FixtureColumn::SpvAxial,
     "printed 6.712 vs computed 6.553; row inconsistent with its neighbours"},
    {"2b", 1.732, PointClass::Center, FixtureColumn::SpvFactorial,
     "printed 11.285 vs computed 11.232; the V cell of the same row matches"},
    {"2b", 1.732, PointClass::Center, FixtureColumn::SpvAxial,
     "printed 10.562 vs computed 10.524; the V cell of the same row matches"},
    {"2b", 1.732, PointClass::Center, FixtureColumn::SpvCenter,
     "printed 5.663 vs computed 17/3 = 5.667; third SPV cell of the same row"},
};

int table_k(std::string_view id) { return id.front() - '0' + 1; }

std::vector<FixtureTable> parse_fixtures() {
  std::vector<FixtureTable> tables;
  std::istringstream in(kFixtureText);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "table") {
      FixtureTable t;
      ls >> t.id;
      t.k = table_k(t.id);
      tables.push_back(std::move(t));
      continue;
    }
    FixtureTable& t = tables.back();
    const double alpha = parse_double(first);
    if (t.is_loss_table()) {
      t.alphas.push_back(alpha);
      const FixtureColumn cols[] = {FixtureColumn::ATrace, FixtureColumn::LossFactorial,
                                    FixtureColumn::LossAxial, FixtureColumn::LossCenter};
      for (FixtureColumn c : cols) {
        std::string v;
        ls >> v;
        t.cells.push_back({alpha, std::nullopt, c, v});
      }
    } else {
      std::string missing;
      ls >> missing;
      std::optional<PointClass> cls;
      if (missing != "none") cls = parse_point_class(missing);
      if (!cls) t.alphas.push_back(alpha);
      const FixtureColumn cols[] = {FixtureColumn::SpvFactorial, FixtureColumn::SpvAxial,
                                    FixtureColumn::SpvCenter, FixtureColumn::VAvg};
      for (FixtureColumn c : cols) {
        std::string v;
        ls >> v;
        t.cells.push_back({alpha, cls, c, v});
      }
    }
  }
  return tables;
}

}  // namespace

std::string_view to_string(FixtureColumn column) {
  switch (column) {
    case FixtureColumn::ATrace:
      return "a_trace";
    case FixtureColumn::LossFactorial:
      return "loss_factorial";
    case FixtureColumn::LossAxial:
      return "loss_axial";
    case FixtureColumn::LossCenter:
      return "loss_center";
    case FixtureColumn::SpvFactorial:
      return "spv_factorial";
    case FixtureColumn::SpvAxial:
      return "spv_axial";
    case FixtureColumn::SpvCenter:
      return "spv_center";
    case FixtureColumn::VAvg:
      return "v_avg";
  }
  return "unknown";
}

double FixtureCell::value() const { return parse_double(printed); }

int FixtureCell::decimals() const {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

double FixtureCell::tolerance() const { return 1.5 * std::pow(10.0, -decimals()); }

const std::vector<FixtureTable>& fixture_tables() {
  static const std::vector<FixtureTable> tables = parse_fixtures();
  return tables;
}

const FixtureTable& fixture_table(std::string_view id) {
  for (const auto& t : fixture_tables()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown table id '" + std::string(id) +
                              "' (expected one of 1a..4a, 1b..4b)");
}

std::vector<double> tabulated_alphas(int k) {
  if (k < 2 || k > 5) return {};
  return fixture_table(std::to_string(k - 1) + "a").alphas;
}

std::optional<std::string> fixture_annotation(std::string_view table_id,
                                              const FixtureCell& cell) {
  for (const auto& a : kAnnotations) {
    if (table_id == a.table && std::abs(cell.alpha - a.alpha) < 1e-9 &&
        cell.missing == a.missing && cell.column == a.column) {
      return std::string(a.note);
    }
  }
  return std::nullopt;
}

}  // namespace ccd
