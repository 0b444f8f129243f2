#include "fplab/family.hpp"

#include <cmath>
#include <set>

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

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadFamily, msg); }

// Split on `sep` at parenthesis depth 0.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) bad("bad integer for " + what + ": " + s);
    return v;
  } catch (const std::logic_error&) {
    bad("bad integer for " + what + ": " + s);
  }
}

std::vector<std::int64_t> int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& part : split_top(s, ':')) out.push_back(to_int(part, what));
  return out;
}

const std::string& need(const Family& f, const std::string& key) {
  auto it = f.params.find(key);
  if (it == f.params.end()) bad(f.kind + " needs parameter " + key);
  return it->second;
}

std::string get_or(const Family& f, const std::string& key, const std::string& fallback) {
  auto it = f.params.find(key);
  return it == f.params.end() ? fallback : it->second;
}

}  // namespace

Family Family::parse(std::string_view text) {
  const std::string t = trim(text);
  Family f;
  const auto open = t.find('(');
  if (open == std::string::npos) {
    f.kind = t;
  } else {
    if (t.back() != ')') bad("unbalanced parentheses in " + t);
    f.kind = trim(std::string_view(t).substr(0, open));
    const std::string body = t.substr(open + 1, t.size() - open - 2);
    if (!trim(body).empty()) {
      for (const auto& kv : split_top(body, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) bad("expected key=value in " + t);
        f.params[trim(std::string_view(kv).substr(0, eq))] = trim(std::string_view(kv).substr(eq + 1));
      }
    }
  }
  static const std::set<std::string> kinds = {"interval", "ap", "gap", "random",
                                              "mult_subgroup", "quadratic_residues", "dilate_union"};
  if (!kinds.count(f.kind)) bad("unknown family kind '" + f.kind + "'");
  return f;
}

std::string Family::str() const {
  if (params.empty()) return kind;
  std::string out = kind + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    out += k + "=" + v;
    first = false;
  }
  return out + ")";
}

std::int64_t eval_size(std::string_view text, std::uint32_t p) {
  const std::string s = trim(text);
  if (s.empty()) bad("empty size");
  if (s[0] != 'p') return to_int(s, "size");
  std::size_t pos = 1;
  double exponent = 1.0;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '.')) ++end;
    if (end == pos) bad("bad exponent in size " + s);
    exponent = std::stod(s.substr(pos, end - pos));
    pos = end;
  }
  // Round up, guarding against p^E landing a hair above an integer.
  const double raw = std::pow(static_cast<double>(p), exponent);
  auto value = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
  if (pos < s.size()) {
    if (s[pos] != '+' && s[pos] != '-') bad("bad size expression " + s);
    const std::int64_t off = to_int(trim(s.substr(pos + 1)), "size offset");
    value += s[pos] == '+' ? off : -off;
  }
  return value;
}

FpSet random_subset(const FieldRef& field, std::size_t n, Rng& rng) {
  const std::uint32_t p = field->p();
  if (n > p) bad("random subset larger than p");
  // Draw the smaller of the set and its complement.
  const bool complement = n > p / 2;
  const std::size_t want = complement ? p - n : n;
  BitVector bits(p);
  std::size_t have = 0;
  while (have < want) {
    const auto x = static_cast<std::uint32_t>(rng() % p);
    if (!bits.test(x)) {
      bits.set(x);
      ++have;
    }
  }
  if (complement) {
    BitVector all(p);
    for (auto& w : all.words()) w = ~std::uint64_t{0};
    all.clear_tail();
    all.subtract(bits);
    bits = std::move(all);
  }
  return FpSet(field, std::move(bits));
}

std::vector<Point3> random_points(std::uint32_t p, std::size_t n, Rng& rng) {
  std::set<Point3> seen;
  std::vector<Point3> out;
  const auto cube = static_cast<std::uint64_t>(p) * p * p;
  if (n > cube) bad("more points than F_p^3 holds");
  while (out.size() < n) {
    Point3 q{static_cast<std::uint32_t>(rng() % p), static_cast<std::uint32_t>(rng() % p),
             static_cast<std::uint32_t>(rng() % p)};
    if (seen.insert(q).second) out.push_back(q);
  }
  return out;
}

std::vector<Plane> random_planes(std::uint32_t p, std::size_t n, Rng& rng) {
  std::set<Plane> seen;
  std::vector<Plane> out;
  const auto total = (static_cast<std::uint64_t>(p) * p * p - 1) / (p - 1) * p;
  if (n > total) bad("more planes than F_p^3 holds");
  while (out.size() < n) {
    const auto a = rng() % p;
    const auto b = rng() % p;
    const auto c = rng() % p;
    const auto d = rng() % p;
    if (a == 0 && b == 0 && c == 0) continue;
    const Plane pl = canonical_plane(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                     static_cast<std::int64_t>(c), static_cast<std::int64_t>(d));
    if (seen.insert(pl).second) out.push_back(pl);
  }
  return out;
}

FpSet generate(const FieldRef& field, const Family& f, std::uint64_t default_seed) {
  const std::uint32_t p = field->p();
  auto size_param = [&](const std::string& key) {
    const std::int64_t n = eval_size(need(f, key), p);
    if (n < 0 || n > static_cast<std::int64_t>(p)) {
      bad(f.kind + ": size " + std::to_string(n) + " outside [0, " + std::to_string(p) + "]");
    }
    return static_cast<std::uint32_t>(n);
  };

  if (f.kind == "interval") {
    return FpSet::interval(field, to_int(get_or(f, "start", "0"), "start"), size_param("n"));
  }
  if (f.kind == "ap") {
    const std::uint32_t n = size_param("n");
    const std::int64_t start = to_int(get_or(f, "start", "0"), "start");
    const std::int64_t step = to_int(need(f, "step"), "step");
    if (reduce(step, p) == 0 && n > 1) bad("ap step is 0 mod p");
    std::vector<std::int64_t> e;
    for (std::uint32_t i = 0; i < n; ++i) e.push_back(start + step * static_cast<std::int64_t>(i));
    FpSet s = FpSet::of(field, e);
    if (s.size() != n) bad("ap wraps around F_p and repeats elements");
    return s;
  }
  if (f.kind == "gap") {
    const auto dims = int_list(need(f, "dims"), "dims");
    std::vector<std::int64_t> steps;
    if (f.params.count("steps")) {
      steps = int_list(f.params.at("steps"), "steps");
    } else {
      std::int64_t d = 1;
      for (auto n : dims) {
        steps.push_back(d);
        d *= 2 * n;
      }
    }
    if (steps.size() != dims.size()) bad("gap: dims and steps differ in length");
    std::vector<std::int64_t> elems = {to_int(get_or(f, "start", "0"), "start")};
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] < 1) bad("gap: dimension sizes must be >= 1");
      std::vector<std::int64_t> next;
      for (auto e : elems)
        for (std::int64_t x = 0; x < dims[i]; ++x) next.push_back(e + x * steps[i]);
      elems = std::move(next);
      if (elems.size() > p) bad("gap larger than p");
    }
    return FpSet::of(field, elems);
  }
  if (f.kind == "random") {
    const std::uint32_t n = size_param("n");
    const auto seed = f.params.count("seed") ? static_cast<std::uint64_t>(to_int(f.params.at("seed"), "seed"))
                                             : default_seed;
    Rng rng(seed);
    return random_subset(field, n, rng);
  }
  if (f.kind == "mult_subgroup") {
    const std::int64_t order = to_int(need(f, "order"), "order");
    if (order < 1 || (p - 1) % order != 0) bad("subgroup order must divide p - 1");
    const auto step = static_cast<std::uint32_t>((p - 1) / order);
    BitVector bits(p);
    for (std::int64_t j = 0; j < order; ++j) bits.set(field->exp(static_cast<std::uint32_t>(j) * step));
    return FpSet(field, std::move(bits));
  }
  if (f.kind == "quadratic_residues") {
    BitVector bits(p);
    for (std::uint32_t x = 1; x < p; ++x) bits.set(mul_mod(x, x, p));
    return FpSet(field, std::move(bits));
  }
  if (f.kind == "dilate_union") {
    const FpSet base = generate(field, Family::parse(need(f, "base")), default_seed);
    FpSet out(field);
    for (auto l : int_list(need(f, "lambdas"), "lambdas")) {
      if (reduce(l, p) == 0) bad("dilation factor divisible by p");
      out = out.set_union(base.dilate_by(l));
    }
    return out;
  }
  bad("unknown family kind '" + f.kind + "'");
}

FpSet generate(const FieldRef& field, std::string_view family, std::uint64_t default_seed) {
  return generate(field, Family::parse(family), default_seed);
}

}  // namespace fplab
