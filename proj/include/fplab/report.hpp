#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fplab {

inline constexpr int kReportSchemaVersion = 1;

using InputValue = std::variant<std::int64_t, double, std::string>;
using Quantity = std::variant<std::int64_t, double>;

/// Experiment record. Maps are ordered so serialization is byte-stable.
///
/// JSON form:
///   {"schema_version": 1, "kind": "...", "timestamp": "...",
///    "inputs": {name: int|real|string}, "quantities": {name: int|real},
///    "flags": {name: bool}, "notes": [string]}
/// Non-finite reals are written as the strings "inf", "-inf" and "nan".
struct Report {
  int schema_version = kReportSchemaVersion;
  std::string kind;
  std::string timestamp;
  std::map<std::string, InputValue> inputs;
  std::map<std::string, Quantity> quantities;
  std::map<std::string, bool> flags;
  std::vector<std::string> notes;

  Report& input(const std::string& name, InputValue v) {
    inputs[name] = std::move(v);
    return *this;
  }
  Report& quantity(const std::string& name, Quantity v) {
    quantities[name] = v;
    return *this;
  }
  Report& flag(const std::string& name, bool v) {
    flags[name] = v;
    return *this;
  }
  Report& note(std::string n) {
    notes.push_back(std::move(n));
    return *this;
  }

  double number(const std::string& name) const;
  std::int64_t integer(const std::string& name) const;
  bool flag_value(const std::string& name) const;
  /// True iff every flag whose name ends in "holds", "verified" or "pass" is
  /// set. Flags named paper_* are recorded only.
  bool all_hold() const;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_json(const Report& r, int indent = 2);
std::string to_json(const std::vector<Report>& reports, int indent = 2);
Report report_from_json(std::string_view text);
std::vector<Report> reports_from_json(std::string_view text);

/// One row per report: kind, then every input, quantity and flag name seen
/// in any report (sorted within each group), missing cells left empty.
std::string to_csv(const std::vector<Report>& reports);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace fplab
