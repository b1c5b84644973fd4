#include "ccd/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "ccd/fixtures.hpp"
#include "ccd/format.hpp"

namespace ccd {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_number(std::string_view key, std::string_view value) {
  try {
    return parse_double(trim(value));
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
}

long to_integer(std::string_view key, std::string_view value) {
  const double v = to_number(key, value);
  if (v != std::floor(v) || std::abs(v) > 9e15) {
    throw ConfigError(std::string(key) + " must be an integer");
  }
  return static_cast<long>(v);
}

}  // namespace

std::vector<double> parse_alpha_list(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.empty()) return out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("alpha range must be start:stop:step");
    const double start = to_number("alphas", parts[0]);
    const double stop = to_number("alphas", parts[1]);
    const double step = to_number("alphas", parts[2]);
    if (!(step > 0.0) || stop < start) throw ConfigError("bad alpha range");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-3));
    for (long i = 0; i <= n; ++i) {
      // Round to 12 significant digits so 1 + 0.1*i prints as expected.
      const double a = start + step * static_cast<double>(i);
      out.push_back(std::round(a * 1e12) / 1e12);
    }
    return out;
  }
  for (auto part : split(text, ',')) {
    if (part.empty()) continue;
    out.push_back(to_number("alphas", part));
  }
  return out;
}

Region RunConfig::region() const {
  if (region_shape == RegionShape::Cuboidal) {
    return Region::cube(region_size.value_or(1.0));
  }
  return Region::sphere(region_size.value_or(std::sqrt(static_cast<double>(k))));
}

std::vector<double> RunConfig::effective_alphas() const {
  if (!alphas.empty()) return alphas;
  return tabulated_alphas(k);
}

SweepConfig RunConfig::sweep_config() const {
  SweepConfig s;
  s.k = k;
  s.n0 = n0;
  s.alphas = effective_alphas();
  s.classes = classes;
  s.region = region();
  s.grid_step = grid_step;
  s.spv_scale = spv_scale;
  s.loss_convention = loss_convention;
  return s;
}

void RunConfig::validate() const {
  if (k < 2) throw ConfigError("k must be >= 2");
  if (k > 10) throw ConfigError("k must be <= 10");
  if (n0 < 1) throw ConfigError("n0 must be >= 1");
  if (region_size && !(*region_size > 0.0)) {
    throw ConfigError("region-size must be > 0");
  }
  if (!(grid_step > 0.0)) throw ConfigError("grid-step must be > 0");
  if (mc_samples < 1) throw ConfigError("mc-samples must be > 0");
  if (classes.empty()) throw ConfigError("classes must not be empty");
  const auto a = effective_alphas();
  if (a.empty()) throw ConfigError("no alpha values given");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0)) throw ConfigError("alpha values must be > 0");
    if (i > 0 && !(a[i] > a[i - 1])) {
      throw ConfigError("alpha values must be strictly ascending");
    }
  }
}

void apply_config_entry(RunConfig& c, std::string_view raw_key,
                        std::string_view raw_value) {
  std::string key(trim(raw_key));
  std::replace(key.begin(), key.end(), '_', '-');
  const std::string_view value = trim(raw_value);

  if (key == "k") {
    c.k = static_cast<int>(to_integer(key, value));
  } else if (key == "n0") {
    c.n0 = static_cast<int>(to_integer(key, value));
  } else if (key == "alpha" || key == "alphas") {
    c.alphas = parse_alpha_list(value);
    if (c.alphas.empty()) throw ConfigError("empty alpha list");
  } else if (key == "region") {
    if (value == "cube" || value == "cuboidal") {
      c.region_shape = RegionShape::Cuboidal;
    } else if (value == "sphere" || value == "spherical") {
      c.region_shape = RegionShape::Spherical;
    } else {
      throw ConfigError("region must be cube|sphere, got '" + std::string(value) + "'");
    }
  } else if (key == "region-size") {
    c.region_size = to_number(key, value);
  } else if (key == "grid-step") {
    c.grid_step = to_number(key, value);
  } else if (key == "spv-scale") {
    try {
      c.spv_scale = parse_spv_scale(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "loss-convention") {
    try {
      c.loss_convention = parse_loss_convention(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "classes") {
    c.classes.clear();
    for (auto part : split(value, ',')) {
      try {
        c.classes.push_back(parse_point_class(part));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  } else if (key == "mc-samples") {
    c.mc_samples = to_integer(key, value);
  } else if (key == "seed") {
    const long s = to_integer(key, value);
    if (s < 0) throw ConfigError("seed must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  } else if (key == "out") {
    c.out = std::string(value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_stream(RunConfig& config, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_config_entry(config, view.substr(0, eq), view.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config_stream(config, in);
}

}  // namespace ccd
