#include "fplab/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <set>
#include <sstream>

#include "fplab/error.hpp"
#include "json.hpp"

namespace fplab {

using nlohmann::json;

double Report::number(const std::string& name) const {
  auto it = quantities.find(name);
  if (it == quantities.end()) throw Error(ErrorCode::MissingParam, "quantity " + name);
  return std::visit([](auto v) { return static_cast<double>(v); }, it->second);
}

std::int64_t Report::integer(const std::string& name) const {
  auto it = quantities.find(name);
  if (it == quantities.end()) throw Error(ErrorCode::MissingParam, "quantity " + name);
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  throw Error(ErrorCode::BadInput, "quantity " + name + " is not an integer");
}

bool Report::flag_value(const std::string& name) const {
  auto it = flags.find(name);
  if (it == flags.end()) throw Error(ErrorCode::MissingParam, "flag " + name);
  return it->second;
}

bool Report::all_hold() const {
  auto ends_with = [](const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  for (const auto& [name, v] : flags) {
    // paper_* flags record a literal statement that is profiled, not asserted.
    if (name.rfind("paper_", 0) == 0) continue;
    if ((ends_with(name, "holds") || ends_with(name, "verified") || ends_with(name, "pass")) && !v) return false;
  }
  return true;
}

namespace {

json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    throw Error(ErrorCode::ParseError, "bad real " + s);
  }
  return j.get<double>();
}

json to_json_value(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["kind"] = r.kind;
  j["timestamp"] = r.timestamp;
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>) {
            inputs[k] = real_to_json(x);
          } else {
            inputs[k] = x;
          }
        },
        v);
  }
  j["inputs"] = inputs;
  json q = json::object();
  for (const auto& [k, v] : r.quantities) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      q[k] = *i;
    } else {
      // Reals carry a marker so 2.0 and 2 remain distinct after a round trip.
      q[k] = json{{"real", real_to_json(std::get<double>(v))}};
    }
  }
  j["quantities"] = q;
  j["flags"] = r.flags.empty() ? json::object() : json(r.flags);
  j["notes"] = r.notes;
  return j;
}

Report from_json_value(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  r.kind = j.at("kind").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) {
    if (v.is_number_integer()) {
      r.inputs[k] = v.get<std::int64_t>();
    } else if (v.is_number()) {
      r.inputs[k] = v.get<double>();
    } else {
      r.inputs[k] = v.get<std::string>();
    }
  }
  for (const auto& [k, v] : j.at("quantities").items()) {
    if (v.is_object()) {
      r.quantities[k] = real_from_json(v.at("real"));
    } else {
      r.quantities[k] = v.get<std::int64_t>();
    }
  }
  for (const auto& [k, v] : j.at("flags").items()) r.flags[k] = v.get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string to_json(const Report& r, int indent) { return to_json_value(r).dump(indent); }

std::string to_json(const std::vector<Report>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json_value(r));
  return arr.dump(indent);
}

Report report_from_json(std::string_view text) {
  try {
    return from_json_value(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<Report> reports_from_json(std::string_view text) {
  try {
    std::vector<Report> out;
    for (const auto& j : json::parse(text)) out.push_back(from_json_value(j));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

std::string csv_cell(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string to_csv(const std::vector<Report>& reports) {
  std::set<std::string> in_keys;
  std::set<std::string> q_keys;
  std::set<std::string> f_keys;
  for (const auto& r : reports) {
    for (const auto& [k, v] : r.inputs) in_keys.insert(k);
    for (const auto& [k, v] : r.quantities) q_keys.insert(k);
    for (const auto& [k, v] : r.flags) f_keys.insert(k);
  }
  std::ostringstream os;
  os << "kind";
  for (const auto& k : in_keys) os << ',' << csv_cell("in." + k);
  for (const auto& k : q_keys) os << ',' << csv_cell(k);
  for (const auto& k : f_keys) os << ',' << csv_cell("flag." + k);
  os << '\n';
  for (const auto& r : reports) {
    os << csv_cell(r.kind);
    for (const auto& k : in_keys) {
      os << ',';
      auto it = r.inputs.find(k);
      if (it == r.inputs.end()) continue;
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) {
              os << csv_cell(x);
            } else if constexpr (std::is_same_v<T, double>) {
              os << fmt_real(x);
            } else {
              os << x;
            }
          },
          it->second);
    }
    for (const auto& k : q_keys) {
      os << ',';
      auto it = r.quantities.find(k);
      if (it == r.quantities.end()) continue;
      if (const auto* i = std::get_if<std::int64_t>(&it->second)) {
        os << *i;
      } else {
        os << fmt_real(std::get<double>(it->second));
      }
    }
    for (const auto& k : f_keys) {
      os << ',';
      auto it = r.flags.find(k);
      if (it != r.flags.end()) os << (it->second ? "true" : "false");
    }
    os << '\n';
  }
  return os.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fplab
