#include "fplab/config.hpp"

#include <fstream>
#include <sstream>

#include "fplab/error.hpp"
#include "fplab/field.hpp"

namespace fplab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::BadConfig, "expected integer, got '" + s + "'");
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadConfig, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw Error(ErrorCode::BadConfig, "line " + std::to_string(lineno) + ": empty key");
    c.values_[key].push_back(trim(std::string_view(t).substr(eq + 1)));
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const std::string& Config::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorCode::BadConfig, "missing key " + key);
  return it->second.back();
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

double Config::get_real(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  try {
    return std::stod(get(key));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadConfig, key + ": expected a number");
  }
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const auto v = to_int(get(key));
  if (v < 0) throw Error(ErrorCode::BadConfig, key + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> Config::list(const std::string& key) const {
  std::vector<std::string> out;
  auto it = values_.find(key);
  if (it == values_.end()) return out;
  for (const auto& v : it->second) {
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= v.size(); ++i) {
      if (i < v.size() && v[i] == '(') ++depth;
      if (i < v.size() && v[i] == ')') --depth;
      if (i == v.size() || (v[i] == ',' && depth == 0)) {
        const std::string item = trim(std::string_view(v).substr(start, i - start));
        if (!item.empty()) out.push_back(item);
        start = i + 1;
      }
    }
  }
  return out;
}

namespace {

template <typename Keep>
std::vector<std::int64_t> expand(const std::vector<std::string>& items, Keep keep) {
  std::vector<std::int64_t> out;
  for (const auto& item : items) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      const auto v = to_int(item);
      if (!keep(v)) throw Error(ErrorCode::BadConfig, "value " + item + " not allowed here");
      out.push_back(v);
      continue;
    }
    const auto lo = to_int(trim(item.substr(0, dots)));
    const auto hi = to_int(trim(item.substr(dots + 2)));
    if (hi < lo) throw Error(ErrorCode::BadConfig, "empty range " + item);
    for (auto v = lo; v <= hi; ++v) {
      if (keep(v)) out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> expand_integers(const std::vector<std::string>& items) {
  return expand(items, [](std::int64_t) { return true; });
}

std::vector<std::int64_t> expand_primes(const std::vector<std::string>& items) {
  return expand(items, [](std::int64_t v) { return v >= 3 && is_prime(static_cast<std::uint64_t>(v)); });
}

}  // namespace fplab
