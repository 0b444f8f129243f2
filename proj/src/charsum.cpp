#include "fplab/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fplab {

CharSumResult character_sum(const Character& chi, const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  if (a.p() != chi.p()) throw Error(ErrorCode::FieldMismatch, "character and sets over different fields");
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "character_sum needs nonempty sets");

  const auto r = sum_representations(a, b);
  std::vector<std::int64_t> per_root(chi.order(), 0);
  for (std::uint32_t s = 0; s < a.p(); ++s) {
    const auto j = chi.root_index(s);
    if (j >= 0 && r[s]) per_root[static_cast<std::size_t>(j)] += r[s];
  }
  CharSumResult out;
  if (chi.is_quadratic()) {
    out.exact = per_root[0] - per_root[1];
    out.value = {static_cast<double>(*out.exact), 0.0};
  } else {
    for (std::uint32_t j = 0; j < chi.order(); ++j) {
      if (per_root[j]) out.value += static_cast<double>(per_root[j]) * chi.root(j);
    }
  }
  out.magnitude = std::abs(out.value);
  const double n = static_cast<double>(a.size()) * static_cast<double>(b.size());
  // |value| can exceed n only by rounding in the roots of unity.
  out.normalized = std::min(1.0, out.magnitude / n);
  return out;
}

namespace {

double pow_int(double base, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// |sum_{t in I} chi(u1 + t) conj(chi(u2 + t))|^2
inline double inner_norm(const Character& chi, std::span<const std::uint32_t> interval, std::uint32_t u1,
                         std::uint32_t u2) {
  const std::uint32_t p = chi.p();
  const auto table = chi.root_table();
  const auto order = static_cast<std::int32_t>(chi.order());
  std::complex<double> s{};
  for (auto t : interval) {
    const std::int32_t x = table[add_mod(u1, t, p)];
    const std::int32_t y = table[add_mod(u2, t, p)];
    if (x < 0 || y < 0) continue;
    std::int32_t d = x - y;
    if (d < 0) d += order;
    s += chi.root(static_cast<std::uint32_t>(d));
  }
  return std::norm(s);
}

inline std::int64_t inner_exact(const Character& chi, std::span<const std::uint32_t> interval, std::uint32_t u1,
                                std::uint32_t u2) {
  const std::uint32_t p = chi.p();
  std::int64_t s = 0;
  for (auto t : interval) s += chi.sign(add_mod(u1, t, p)) * chi.sign(add_mod(u2, t, p));
  return s;
}

}  // namespace

MomentResult moment_sum(const Character& chi, const FpSet& interval, std::uint32_t r, const MomentOptions& opts) {
  if (interval.p() != chi.p()) throw Error(ErrorCode::FieldMismatch, "moment_sum");
  if (interval.empty() || !is_interval(interval)) {
    throw Error(ErrorCode::NotInterval, interval.str() + " is not a nonempty interval");
  }
  if (r < 1) throw Error(ErrorCode::BadParams, "r must be >= 1");

  const std::uint32_t p = chi.p();
  const auto elems = interval.elements();
  MomentResult out;
  BoundParams bp;
  bp.p = p;
  bp.interval_size = static_cast<double>(elems.size());
  bp.r = r;
  out.rhs = bound_eval(BoundName::Lemma1, bp);

  if (p <= opts.exhaustive_limit) {
    out.pairs_evaluated = static_cast<std::uint64_t>(p) * p;
    const bool fits_int64 = std::pow(static_cast<double>(elems.size()), 2.0 * r) * p * p < 9.0e18;
    if (chi.is_quadratic() && fits_int64) {
      std::vector<std::int64_t> rows(p, 0);
#pragma omp parallel for schedule(static)
      for (std::int64_t u1 = 0; u1 < static_cast<std::int64_t>(p); ++u1) {
        std::int64_t acc = 0;
        for (std::uint32_t u2 = 0; u2 < p; ++u2) {
          const std::int64_t s = inner_exact(chi, elems, static_cast<std::uint32_t>(u1), u2);
          std::int64_t v = 1;
          for (std::uint32_t i = 0; i < 2 * r; ++i) v *= s;
          acc += v;
        }
        rows[static_cast<std::size_t>(u1)] = acc;
      }
      std::int64_t total = 0;
      for (auto v : rows) total += v;
      out.exact_lhs = total;
      out.lhs = static_cast<double>(total);
    } else {
      std::vector<double> rows(p, 0.0);
#pragma omp parallel for schedule(static)
      for (std::int64_t u1 = 0; u1 < static_cast<std::int64_t>(p); ++u1) {
        double acc = 0.0;
        for (std::uint32_t u2 = 0; u2 < p; ++u2) {
          acc += pow_int(inner_norm(chi, elems, static_cast<std::uint32_t>(u1), u2), r);
        }
        rows[static_cast<std::size_t>(u1)] = acc;
      }
      for (double v : rows) out.lhs += v;
    }
  } else {
    out.sampled = true;
    out.pairs_evaluated = opts.samples;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint32_t> us(2 * opts.samples);
    for (auto& u : us) u = static_cast<std::uint32_t>(rng() % p);
    std::vector<double> vals(opts.samples);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(opts.samples); ++i) {
      const auto k = static_cast<std::size_t>(i);
      vals[k] = pow_int(inner_norm(chi, elems, us[2 * k], us[2 * k + 1]), r);
    }
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(opts.samples);
    out.lhs = mean * static_cast<double>(p) * static_cast<double>(p);
  }
  out.holds = out.lhs < out.rhs;
  return out;
}

BoundName parse_bound_name(std::string_view name) {
  if (name == "thm2") return BoundName::Thm2;
  if (name == "thm4") return BoundName::Thm4;
  if (name == "lemma1") return BoundName::Lemma1;
  if (name == "cor1_small_doubling") return BoundName::Cor1SmallDoubling;
  if (name == "cor1_general") return BoundName::Cor1General;
  if (name == "thm1_param") return BoundName::Thm1Param;
  throw Error(ErrorCode::BadParams, "unknown bound " + std::string(name));
}

namespace {

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw Error(ErrorCode::MissingParam, name);
  return *v;
}

double size_factor(const BoundParams& bp) {
  if (bp.size_a && bp.size_b) return *bp.size_a * *bp.size_b;
  return 1.0;
}

}  // namespace

double thm2_level(double p, double K, double delta) {
  const double lk = std::log2(K);
  return std::cbrt(delta * std::log2(p) / (lk * lk));
}

double bound_eval(BoundName name, const BoundParams& bp) {
  const double c = bp.c.value_or(1.0);
  switch (name) {
    case BoundName::Thm2:
    case BoundName::Thm4: {
      const double p = need(bp.p, "p");
      const double K = need(bp.K, "K");
      const double delta = need(bp.delta, "delta");
      const double lk = std::log2(K);
      const double d2 = delta * delta;
      return std::exp(-c * std::cbrt(d2 * d2 * std::log2(p) / (lk * lk))) * size_factor(bp);
    }
    case BoundName::Lemma1: {
      const double p = need(bp.p, "p");
      const double i = need(bp.interval_size, "interval_size");
      const double r = need(bp.r, "r");
      return p * p * std::pow(i, r) * std::pow(r, 2 * r) + 4 * r * r * p * std::pow(i, 2 * r);
    }
    case BoundName::Cor1SmallDoubling: {
      const double p = need(bp.p, "p");
      const double K = need(bp.K, "K");
      const double L = need(bp.L, "L");
      const double a = need(bp.size_a, "size_a");
      const double b = need(bp.size_b, "size_b");
      return std::pow(K, 1.25) * std::pow(L, 2.5) * a * b * b * std::log2(p) + a * a * b;
    }
    case BoundName::Cor1General: {
      const double K = need(bp.K, "K");
      const double a = need(bp.size_a, "size_a");
      const double b = need(bp.size_b, "size_b");
      return std::pow(K, 1.5) * a * std::pow(b, 2.5);
    }
    case BoundName::Thm1Param: {
      const double p = need(bp.p, "p");
      const double delta = need(bp.delta, "delta");
      const double ck = need(bp.CK, "CK");
      return std::pow(p, -delta * delta / ck) * size_factor(bp);
    }
  }
  throw Error(ErrorCode::BadParams, "unknown bound");
}

Report paley_profile(const Character& chi, const FpSet& a, const FpSet& b, const PaleyOptions& opts) {
  const auto sum = character_sum(chi, a, b);
  const auto K = doubling(a);
  const auto L = doubling(b);
  const double p = chi.p();
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double delta = opts.delta;

  BoundParams bp;
  bp.p = p;
  bp.K = K.value();
  bp.L = L.value();
  bp.delta = delta;
  bp.c = opts.c;
  const double thm2 = bound_eval(BoundName::Thm2, bp);
  const double thm4 = bound_eval(BoundName::Thm4, bp);

  Report rep;
  rep.kind = "paley";
  rep.input("p", static_cast<std::int64_t>(chi.p()))
      .input("char", static_cast<std::int64_t>(chi.k()))
      .input("delta", delta)
      .input("c", opts.c);
  rep.quantity("size_a", static_cast<std::int64_t>(a.size()))
      .quantity("size_b", static_cast<std::int64_t>(b.size()))
      .quantity("char_order", static_cast<std::int64_t>(chi.order()))
      .quantity("sum_re", sum.value.real())
      .quantity("sum_im", sum.value.imag())
      .quantity("magnitude", sum.magnitude)
      .quantity("normalized", sum.normalized)
      .quantity("K", K.value())
      .quantity("K_num", K.num)
      .quantity("K_den", K.den)
      .quantity("L", L.value())
      .quantity("L_num", L.num)
      .quantity("L_den", L.den)
      .quantity("thm2_bound_normalized", thm2)
      .quantity("thm4_bound_normalized", thm4)
      .quantity("thm2_level", thm2_level(p, K.value(), delta))
      .quantity("tau_empirical", sum.normalized > 0 ? -std::log(sum.normalized) / std::log(p) : HUGE_VAL);
  if (sum.exact) rep.quantity("sum_exact", *sum.exact);
  rep.flag("thm2_hyp_size_a", na > std::pow(p, delta))
      .flag("thm2_hyp_size_b", nb > std::pow(p, 1.0 / 3.0 + delta))
      .flag("thm2_hyp_product", na * nb * nb > std::pow(p, 1.0 + delta))
      .flag("thm2_hyp_L", L.value() <= std::pow(p, delta / 2))
      .flag("thm4_hyp_product", na * na * nb * nb * nb > std::pow(p, 2.0 + delta))
      .flag("normalized_below_thm2", sum.normalized <= thm2);
  return rep;
}

}  // namespace fplab
