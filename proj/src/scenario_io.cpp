#include "jsdmix/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace jsdmix {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

std::vector<double> number_array(const json& doc, const char* key,
                                 const std::string& origin) {
  if (!doc.contains(key)) fail(origin, std::string("missing key '") + key + "'");
  const json& arr = doc.at(key);
  if (!arr.is_array()) fail(origin, std::string("'") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) {
      fail(origin, std::string("'") + key + "' holds a non-numeric entry");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

double number_field(const json& doc, const char* key,
                    const std::string& origin) {
  if (!doc.contains(key)) fail(origin, std::string("missing key '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number()) fail(origin, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

void append_mass_array(std::string& out, const Pmf& p) {
  out += '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_double(p[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

MixtureScenario scenario_from_json(const std::string& text,
                                   const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());  // nlohmann includes line/column context
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");

  if (!doc.contains("alphabet")) fail(origin, "missing key 'alphabet'");
  const json& alpha = doc.at("alphabet");
  if (!alpha.is_array() || alpha.empty()) {
    fail(origin, "'alphabet' must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(alpha.size());
  for (const json& l : alpha) {
    if (l.is_string()) {
      labels.push_back(l.get<std::string>());
    } else if (l.is_number_integer()) {
      labels.push_back(std::to_string(l.get<long long>()));
    } else {
      fail(origin, "alphabet labels must be strings or integers");
    }
  }

  try {
    auto alphabet = std::make_shared<const Alphabet>(std::move(labels));
    const std::size_t n = alphabet->size();
    auto load_pmf = [&](const char* key) {
      std::vector<double> mass = number_array(doc, key, origin);
      if (mass.size() != n) {
        fail(origin, std::string("'") + key + "' has " +
                         std::to_string(mass.size()) + " entries for " +
                         std::to_string(n) + " alphabet symbols");
      }
      return Pmf(alphabet, std::move(mass));
    };
    Pmf p1 = load_pmf("p_tilde_1");
    Pmf p2 = load_pmf("p_tilde_2");
    Pmf q = load_pmf("q");
    const double l1 = number_field(doc, "lambda_1", origin);
    const double l2 = number_field(doc, "lambda_2", origin);
    return MixtureScenario(std::move(p1), std::move(p2), std::move(q),
                           Weight(l1), Weight(l2));
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(origin, e.what());
  }
}

MixtureScenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str(), path);
}

std::string scenario_to_json(const MixtureScenario& s) {
  std::string out = "{\n  \"alphabet\": [";
  const Alphabet& a = *s.q().alphabet();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += json(a.label(i)).dump();  // handles quoting and escapes
  }
  out += "],\n  \"p_tilde_1\": ";
  append_mass_array(out, s.p_tilde_1());
  out += ",\n  \"p_tilde_2\": ";
  append_mass_array(out, s.p_tilde_2());
  out += ",\n  \"q\": ";
  append_mass_array(out, s.q());
  out += ",\n  \"lambda_1\": " + format_double(s.lambda_1());
  out += ",\n  \"lambda_2\": " + format_double(s.lambda_2());
  out += "\n}\n";
  return out;
}

void save_scenario(const MixtureScenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << scenario_to_json(s);
  if (!out) fail(path, "write failed");
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "# scenario: " << result.metadata.scenario << "\n";
  out << "# resolution: " << result.metadata.resolution << "\n";
  out << "# tool_version: " << result.metadata.tool_version << "\n";
  out << "# kernel: " << result.metadata.kernel << "\n";
  for (std::size_t a = 0; a < result.axis_names.size(); ++a) {
    if (a) out << ',';
    out << result.axis_names[a];
  }
  out << ",sjsd_nats\n";
  for (const SweepRecord& rec : result.records) {
    for (double p : rec.params) out << format_double(p) << ',';
    out << format_double(rec.sjsd_nats) << '\n';
  }
}

void write_csv_file(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  write_csv(result, out);
  if (!out) fail(path, "write failed");
}

}  // namespace jsdmix
