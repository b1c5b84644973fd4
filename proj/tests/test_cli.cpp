#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ccd/fixtures.hpp"
#include "ccd/format.hpp"
#include "ccd/report_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Run ccdtool(const std::string& args) {
  const fs::path out = fs::current_path() / "cli_stdout.txt";
  const fs::path err = fs::current_path() / "cli_stderr.txt";
  const std::string cmd = std::string("\"") + CCDTOOL_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::vector<std::string>> records(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) rows.push_back(ccd::parse_csv_record(line));
  return rows;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::current_path() / name;
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("generate emits one row per run") {
  const Run r2 = ccdtool("--k 2 --alpha 1.414 --n0 4 generate");
  CHECK(r2.code == 0);
  const auto rows2 = records(r2.out);
  REQUIRE(rows2.size() == 13);
  CHECK(rows2[0] == std::vector<std::string>{"x1", "x2", "class"});
  CHECK(rows2[5] == std::vector<std::string>{"-1.414", "0", "axial"});

  const Run r3 = ccdtool("--k 3 --alpha 1.681 --n0 4 generate");
  CHECK(r3.code == 0);
  CHECK(records(r3.out).size() == 19);
}

TEST_CASE("generate model matrix and file output") {
  const fs::path dir = fresh_dir("cli_generate");
  fs::create_directories(dir);
  const fs::path file = dir / "x.csv";
  const Run r = ccdtool("--k 2 --alpha 2 --n0 1 --out \"" + file.string() + "\" generate --model-matrix");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto rows = records(slurp(file));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].back() == "x1*x2");
  CHECK(rows[5] == std::vector<std::string>{"1", "-2", "0", "4", "0", "0"});
}

TEST_CASE("generate rejects bad input") {
  CHECK(ccdtool("--k 1 --alpha 1 generate").code == 1);
  CHECK(ccdtool("--k 2 --alpha -1 generate").code == 1);
  CHECK(ccdtool("--k 2 generate").code == 1);
  CHECK(ccdtool("--k 2 --alphas 1,2 generate").code == 1);
  const Run r = ccdtool("--k two --alpha 1 generate");
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors and help") {
  CHECK(ccdtool("").code == 1);
  CHECK(ccdtool("frobnicate").code == 1);
  CHECK(ccdtool("--help").code == 0);
}

TEST_CASE("verify") {
  const Run ok = ccdtool("verify 1a");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("summary 1a: a_trace 5/5 loss 15/15") != std::string::npos);
  CHECK(ok.out.find("result: PASS") != std::string::npos);

  const Run two = ccdtool("verify 2a");
  CHECK(two.code == 0);
  CHECK(two.out.find("2a alpha=1.681 missing=none a_trace expected=1.0814") != std::string::npos);

  const Run b = ccdtool("--mc-samples 2000 verify 1b");
  CHECK(b.code == 0);
  CHECK(b.out.find("calibration 1b verdict: matched cube(a=1)") != std::string::npos);

  CHECK(ccdtool("verify bogus").code == 1);
  // Exact arithmetic does not reproduce the printed loss cells.
  CHECK(ccdtool("--loss-convention exact verify 1a").code == 2);
}

TEST_CASE("sweep reproduces the loss tables") {
  const fs::path dir = fresh_dir("cli_sweep");
  const Run r = ccdtool("--k 2 --out \"" + dir.string() + "\" sweep");
  CHECK(r.code == 0);
  const auto rows = records(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][0] == "alpha");
  CHECK(rows[0][2] == "loss_factorial");
  const ccd::FixtureTable& table = ccd::fixture_table("1a");
  int compared = 0;
  for (const auto& cell : table.cells) {
    if (cell.column == ccd::FixtureColumn::ATrace) continue;
    const int col = cell.column == ccd::FixtureColumn::LossFactorial ? 2
                    : cell.column == ccd::FixtureColumn::LossAxial   ? 3
                                                                     : 4;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (ccd::parse_double(rows[i][0]) != cell.alpha) continue;
      CHECK(std::abs(ccd::parse_double(rows[i][col]) - cell.value()) <= cell.tolerance());
      ++compared;
    }
  }
  CHECK(compared == 15);
  for (const char* f : {"sweep_k2_loss.csv", "sweep_k2_spv.csv", "sweep_k2_long.csv",
                        "sweep_k2_criteria.csv", "sweep_k2_criteria.json"}) {
    CHECK(fs::exists(dir / f));
  }
  CHECK(slurp(dir / "sweep_k2_loss.csv") == r.out);
  std::istringstream longcsv(slurp(dir / "sweep_k2_long.csv"));
  CHECK_FALSE(ccd::read_long_csv(longcsv).empty());
}

TEST_CASE("sweep k=5 axial loss at alpha 1") {
  const fs::path dir = fresh_dir("cli_sweep5");
  const Run r = ccdtool("--k 5 --alphas 1 --classes axial --out \"" + dir.string() + "\" sweep");
  CHECK(r.code == 0);
  const auto rows = records(r.out);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "a_trace", "loss_axial", "re_g_axial", "re_v_axial"});
  CHECK(std::abs(ccd::parse_double(rows[1][2]) - 0.1580557) <= 1.5e-7);
}

TEST_CASE("empty alpha grid is an error") {
  const fs::path dir = fresh_dir("cli_empty");
  CHECK(ccdtool("--k 2 --alphas \"\" --out \"" + dir.string() + "\" sweep").code == 1);
  CHECK(ccdtool("--k 2 --alphas \"\" --out \"" + dir.string() + "\" plot --metric loss").code == 1);
  CHECK(ccdtool("--k 2 --out \"" + dir.string() + "\" plot --metric loudness").code == 1);
}

TEST_CASE("config file with flag override") {
  const fs::path dir = fresh_dir("cli_config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "# sweep settings\nk = 3\nalphas = 1,2\nclasses = center\nout = " << dir.string()
        << "\n";
  }
  const Run r = ccdtool("--config \"" + (dir / "run.cfg").string() + "\" --alphas 1.5 sweep");
  CHECK(r.code == 0);
  const auto rows = records(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "1.5");
  CHECK(fs::exists(dir / "sweep_k3_loss.csv"));

  CHECK(ccdtool("--config \"" + (dir / "missing.cfg").string() + "\" sweep").code == 1);
}

TEST_CASE("plot writes an svg and its data") {
  const fs::path dir = fresh_dir("cli_plot");
  const Run r = ccdtool("--k 2 --out \"" + dir.string() + "\" plot --metric loss");
  CHECK(r.code == 0);
  const std::string svg = slurp(dir / "plot_loss_k2.svg");
  CHECK(svg.rfind("<?xml", 0) == 0);
  // One path per missing class.
  std::size_t paths = 0;
  for (auto pos = svg.find("<path"); pos != std::string::npos; pos = svg.find("<path", pos + 1)) ++paths;
  CHECK(paths == 3);
  std::istringstream data(slurp(dir / "plot_loss_k2.csv"));
  const auto rows = ccd::read_long_csv(data);
  CHECK(rows.size() == 15);
  // Factorial loss is the highest at alpha 1.
  double f = 0, a = 0, c = 0;
  for (const auto& row : rows) {
    if (row.alpha != 1.0) continue;
    const double v = ccd::parse_double(row.value);
    if (row.missing_class == "factorial") f = v;
    if (row.missing_class == "axial") a = v;
    if (row.missing_class == "center") c = v;
  }
  CHECK(f > a);
  CHECK(f > c);
}

TEST_CASE("sweep and plot are byte-for-byte deterministic") {
  const fs::path a = fresh_dir("cli_det_a");
  const fs::path b = fresh_dir("cli_det_b");
  for (const fs::path& d : {a, b}) {
    const std::string common = "--k 4 --alphas 1:3:0.5 --out \"" + d.string() + "\" ";
    REQUIRE(ccdtool(common + "sweep").code == 0);
    REQUIRE(ccdtool(common + "plot --metric re_v").code == 0);
  }
  int n = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++n;
    CHECK_MESSAGE(slurp(e.path()) == slurp(b / e.path().filename()), e.path().filename().string());
  }
  CHECK(n == 7);
}
