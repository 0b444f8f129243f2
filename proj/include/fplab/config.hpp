#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fplab {

/// Flat `key = value` configuration. Lines starting with '#' are comments.
/// Keys may repeat; every value is kept in file order.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  /// Last value of key; throws BadConfig when absent.
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_real(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

  /// All values of a `range.` key, each split on top-level commas.
  std::vector<std::string> list(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { values_[key].push_back(value); }
  const std::map<std::string, std::vector<std::string>>& entries() const { return values_; }

 private:
  std::map<std::string, std::vector<std::string>> values_;
};

/// Expand integer items: "7" or "7..97" (every integer in the range).
std::vector<std::int64_t> expand_integers(const std::vector<std::string>& items);
/// Expand modulus items: "101" or "101..499" (every prime in the range).
std::vector<std::int64_t> expand_primes(const std::vector<std::string>& items);

}  // namespace fplab
