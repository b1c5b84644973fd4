#include "ccd/report_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ccd/format.hpp"

namespace ccd {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> parse_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

namespace {

std::string join_location(const std::vector<double>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ';';
    s += format_double(x[i]);
  }
  return s;
}

std::string cell_value(const ScenarioMetrics* m, double ScenarioMetrics::*field) {
  if (!m) return "";
  if (!m->ok()) return "inestimable";
  return format_double(m->*field);
}

}  // namespace

void write_criteria_csv(std::ostream& out,
                        const std::vector<CriteriaReport>& reports) {
  out << "alpha,a_trace,spv_factorial,spv_axial,spv_center,g_max,g_max_location,"
         "g_eff,v_avg_cuboidal,v_avg_spherical,rotatability_index\n";
  for (const auto& r : reports) {
    out << format_double(r.alpha) << ',' << format_double(r.a_trace) << ','
        << format_double(r.spv_factorial) << ',' << format_double(r.spv_axial)
        << ',' << format_double(r.spv_center) << ',' << format_double(r.g_max)
        << ',' << csv_field(join_location(r.g_max_location)) << ','
        << format_double(r.g_eff) << ',' << format_double(r.v_avg_cuboidal)
        << ',' << format_double(r.v_avg_spherical) << ','
        << format_double(r.rotatability_index) << '\n';
  }
}

void write_criteria_json(std::ostream& out,
                         const std::vector<CriteriaReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["alpha"] = r.alpha;
    j["a_trace"] = r.a_trace;
    j["spv_factorial"] = r.spv_factorial;
    j["spv_axial"] = r.spv_axial;
    j["spv_center"] = r.spv_center;
    j["g_max"] = r.g_max;
    j["g_max_location"] = r.g_max_location;
    j["g_eff"] = r.g_eff;
    j["v_avg_cuboidal"] = r.v_avg_cuboidal;
    j["v_avg_spherical"] = r.v_avg_spherical;
    j["rotatability_index"] = r.rotatability_index;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_loss_csv(std::ostream& out, const std::vector<LossReport>& reports) {
  std::vector<PointClass> classes;
  if (!reports.empty()) {
    for (const auto& c : reports.front().cells) classes.push_back(c.missing);
  }
  out << "alpha,a_trace";
  for (const char* prefix : {"loss_", "re_g_", "re_v_"}) {
    for (PointClass c : classes) out << ',' << prefix << to_string(c);
  }
  out << '\n';
  for (const auto& r : reports) {
    out << format_double(r.alpha) << ',' << format_double(r.a_full);
    for (auto field : {&ScenarioMetrics::loss, &ScenarioMetrics::re_g,
                       &ScenarioMetrics::re_v}) {
      for (PointClass c : classes) out << ',' << cell_value(r.cell(c), field);
    }
    out << '\n';
  }
}

void write_spv_csv(std::ostream& out, const std::vector<LossReport>& reports) {
  out << "alpha,missing,spv_factorial,spv_axial,spv_center,v_avg,g_max\n";
  for (const auto& r : reports) {
    out << format_double(r.alpha) << ",none," << format_double(r.full.spv_factorial)
        << ',' << format_double(r.full.spv_axial) << ','
        << format_double(r.full.spv_center) << ',' << format_double(r.v_avg_full)
        << ',' << format_double(r.g_max_full) << '\n';
    for (const auto& m : r.cells) {
      out << format_double(r.alpha) << ',' << to_string(m.missing);
      for (auto field : {&ScenarioMetrics::spv_factorial, &ScenarioMetrics::spv_axial,
                         &ScenarioMetrics::spv_center, &ScenarioMetrics::v_avg,
                         &ScenarioMetrics::g_max}) {
        out << ',' << cell_value(&m, field);
      }
      out << '\n';
    }
  }
}

std::vector<LongRow> long_rows(int k, const std::vector<LossReport>& reports) {
  std::vector<LongRow> rows;
  for (const auto& r : reports) {
    auto add = [&](std::string_view cls, std::string_view metric, std::string value) {
      rows.push_back({k, r.alpha, std::string(cls), std::string(metric), std::move(value)});
    };
    add("none", "a_trace", format_double(r.a_full));
    add("none", "spv_factorial", format_double(r.full.spv_factorial));
    add("none", "spv_axial", format_double(r.full.spv_axial));
    add("none", "spv_center", format_double(r.full.spv_center));
    add("none", "g_max", format_double(r.g_max_full));
    add("none", "v_avg", format_double(r.v_avg_full));
    for (const auto& m : r.cells) {
      const std::string_view cls = to_string(m.missing);
      const std::pair<std::string_view, double ScenarioMetrics::*> metrics[] = {
          {"a_trace", &ScenarioMetrics::a_trace},
          {"loss", &ScenarioMetrics::loss},
          {"spv_factorial", &ScenarioMetrics::spv_factorial},
          {"spv_axial", &ScenarioMetrics::spv_axial},
          {"spv_center", &ScenarioMetrics::spv_center},
          {"g_max", &ScenarioMetrics::g_max},
          {"v_avg", &ScenarioMetrics::v_avg},
          {"re_g", &ScenarioMetrics::re_g},
          {"re_v", &ScenarioMetrics::re_v},
      };
      for (const auto& [name, field] : metrics) add(cls, name, cell_value(&m, field));
    }
  }
  return rows;
}

void write_long_csv(std::ostream& out, const std::vector<LongRow>& rows) {
  out << kLongHeader << '\n';
  for (const auto& r : rows) {
    out << r.k << ',' << format_double(r.alpha) << ',' << csv_field(r.missing_class)
        << ',' << csv_field(r.metric) << ',' << csv_field(r.value) << '\n';
  }
}

std::vector<LongRow> read_long_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty long CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kLongHeader) throw std::invalid_argument("unexpected long CSV header");
  std::vector<LongRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = parse_csv_record(line);
    if (f.size() != 5) throw std::invalid_argument("long CSV row needs 5 fields");
    LongRow r;
    r.k = static_cast<int>(parse_double(f[0]));
    r.alpha = parse_double(f[1]);
    r.missing_class = f[2];
    r.metric = f[3];
    r.value = f[4];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ccd
