// Command-line front end: generate designs, run missing-run sweeps, check the
// embedded reference tables, and plot loss / efficiency curves.
//
// Exit codes: 0 success, 1 usage or config error, 2 verification failure,
// 3 numeric failure (inestimable design outside a sweep).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccd/config.hpp"
#include "ccd/design.hpp"
#include "ccd/fixtures.hpp"
#include "ccd/missing.hpp"
#include "ccd/model.hpp"
#include "ccd/plot.hpp"
#include "ccd/report_io.hpp"
#include "ccd/svg_chart.hpp"
#include "ccd/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitNumeric = 3;

// Flag name -> config key. Values given on the command line are applied
// after the config file, so flags win.
const std::vector<std::pair<std::string, std::string>> kFlags = {
    {"--k", "k"},
    {"--n0", "n0"},
    {"--alpha", "alpha"},
    {"--alphas", "alphas"},
    {"--region", "region"},
    {"--region-size", "region-size"},
    {"--grid-step", "grid-step"},
    {"--spv-scale", "spv-scale"},
    {"--loss-convention", "loss-convention"},
    {"--classes", "classes"},
    {"--mc-samples", "mc-samples"},
    {"--seed", "seed"},
    {"--out", "out"},
};

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ccd::ConfigError("cannot write " + path.string());
  f << contents;
}

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

fs::path output_dir(const ccd::RunConfig& cfg) {
  fs::path dir(cfg.out);
  fs::create_directories(dir);
  return dir;
}

int cmd_generate(const ccd::RunConfig& cfg, bool model_matrix, bool out_given) {
  if (cfg.alphas.size() != 1) {
    throw ccd::ConfigError("generate needs exactly one --alpha");
  }
  const ccd::Design design = ccd::gen_ccd(cfg.k, cfg.alphas.front(), cfg.n0);
  const std::string text = render([&](std::ostream& o) {
    if (model_matrix) {
      ccd::write_model_matrix_csv(o, ccd::model_matrix(design));
    } else {
      ccd::write_design_csv(o, design);
    }
  });
  if (out_given) {
    write_file(cfg.out, text);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int cmd_sweep(const ccd::RunConfig& cfg) {
  const auto reports = ccd::scenario_sweep(cfg.sweep_config());
  const fs::path dir = output_dir(cfg);
  const std::string stem = "sweep_k" + std::to_string(cfg.k);

  std::vector<ccd::CriteriaReport> criteria;
  for (const auto& r : reports) criteria.push_back(r.full);

  const std::string loss = render([&](std::ostream& o) { ccd::write_loss_csv(o, reports); });
  write_file(dir / (stem + "_loss.csv"), loss);
  write_file(dir / (stem + "_spv.csv"),
             render([&](std::ostream& o) { ccd::write_spv_csv(o, reports); }));
  write_file(dir / (stem + "_long.csv"), render([&](std::ostream& o) {
               ccd::write_long_csv(o, ccd::long_rows(cfg.k, reports));
             }));
  write_file(dir / (stem + "_criteria.csv"),
             render([&](std::ostream& o) { ccd::write_criteria_csv(o, criteria); }));
  write_file(dir / (stem + "_criteria.json"),
             render([&](std::ostream& o) { ccd::write_criteria_json(o, criteria); }));

  std::cout << loss;
  int inestimable = 0;
  for (const auto& r : reports) {
    for (const auto& c : r.cells) inestimable += c.ok() ? 0 : 1;
  }
  std::cerr << "wrote " << (dir / stem).string() << "_{loss,spv,long,criteria}.csv and "
            << stem << "_criteria.json";
  if (inestimable) std::cerr << " (" << inestimable << " inestimable cells)";
  std::cerr << '\n';
  return kExitOk;
}

int cmd_verify(const ccd::RunConfig& cfg, std::vector<std::string> tables) {
  if (tables.empty()) tables = {"1a", "2a", "3a", "4a", "1b", "2b", "3b", "4b"};
  for (const auto& id : tables) ccd::fixture_table(id);  // reject unknown ids early

  ccd::VerifyOptions opts;
  opts.spv_scale = cfg.spv_scale;
  opts.loss_convention = cfg.loss_convention;
  opts.mc_samples = cfg.mc_samples;
  opts.seed = cfg.seed;
  const ccd::VerifyReport report = ccd::run_verify(tables, opts);
  ccd::write_verify_report(std::cout, report);
  return report.passed() ? kExitOk : kExitVerify;
}

int cmd_plot(const ccd::RunConfig& cfg, const std::string& metric_name) {
  const ccd::PlotMetric metric = ccd::parse_plot_metric(metric_name);
  const auto reports = ccd::scenario_sweep(cfg.sweep_config());
  const fs::path dir = output_dir(cfg);
  const std::string stem =
      "plot_" + std::string(ccd::to_string(metric)) + "_k" + std::to_string(cfg.k);
  write_file(dir / (stem + ".svg"),
             ccd::render_svg(ccd::metric_chart(cfg.k, reports, metric)));
  write_file(dir / (stem + ".csv"), render([&](std::ostream& o) {
               ccd::write_long_csv(o, ccd::metric_rows(cfg.k, reports, metric));
             }));
  std::cerr << "wrote " << (dir / stem).string() << ".{svg,csv}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central composite designs: criteria and robustness to missing runs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  for (const auto& [flag, key] : kFlags) {
    opts[key] = app.add_option(flag, raw[key]);
  }
  opts["k"]->description("number of factors (>= 2)");
  opts["n0"]->description("number of center runs (default 4)");
  opts["alpha"]->description("single axial distance");
  opts["alphas"]->description("axial distances: a,b,c or start:stop:step");
  opts["region"]->description("cube|sphere (default cube)");
  opts["region-size"]->description("cube half-width or sphere radius");
  opts["grid-step"]->description("G-max grid spacing (default 0.1)");
  opts["spv-scale"]->description("residual|full run count for residual SPV");
  opts["loss-convention"]->description("tabulated|exact (default tabulated)");
  opts["classes"]->description("missing classes, e.g. factorial,axial,center");
  opts["mc-samples"]->description("Monte-Carlo samples for verify cross-checks");
  opts["seed"]->description("Monte-Carlo seed");
  opts["out"]->description("output directory (generate: output file)");
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  auto* gen = app.add_subcommand("generate", "emit a CCD as CSV");
  bool model_matrix = false;
  gen->add_flag("--model-matrix", model_matrix, "emit the quadratic model matrix instead");

  auto* sweep = app.add_subcommand("sweep", "loss and efficiency sweep over alpha");

  auto* verify = app.add_subcommand("verify", "recompute the embedded reference tables");
  std::vector<std::string> tables;
  verify->add_option("tables", tables, "table ids (1a..4a, 1b..4b); default all");

  auto* plot = app.add_subcommand("plot", "SVG curves of loss or relative efficiency");
  std::string metric = "loss";
  plot->add_option("--metric", metric, "loss|re_g|re_v");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ccd::RunConfig cfg;
    if (!config_path.empty()) ccd::apply_config_file(cfg, config_path);
    for (const auto& [flag, key] : kFlags) {
      if (opts[key]->count() > 0) ccd::apply_config_entry(cfg, key, raw[key]);
    }
    cfg.validate();

    if (gen->parsed()) return cmd_generate(cfg, model_matrix, opts["out"]->count() > 0);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (verify->parsed()) return cmd_verify(cfg, tables);
    if (plot->parsed()) return cmd_plot(cfg, metric);
  } catch (const ccd::SingularMatrixError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
