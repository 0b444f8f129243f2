#include "fplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fplab {

DenseFunction::DenseFunction(FieldRef field) : field_(std::move(field)), values_(field_->p()) {}

DenseFunction::DenseFunction(FieldRef field, std::vector<std::complex<double>> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_->p()) throw Error(ErrorCode::BadInput, "function table must have length p");
}

DenseFunction DenseFunction::indicator(const FpSet& s) {
  DenseFunction f(s.field());
  s.for_each([&](std::uint32_t x) { f[x] = 1.0; });
  return f;
}

DenseFunction DenseFunction::delta(FieldRef field, std::uint32_t at) {
  DenseFunction f(std::move(field));
  f[at % f.p()] = 1.0;
  return f;
}

std::vector<std::complex<double>> twiddles(std::uint32_t p) {
  std::vector<std::complex<double>> w(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    w[t] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(t) / p);
  }
  return w;
}

DenseFunction dft(const DenseFunction& f) {
  const std::uint32_t p = f.p();
  const auto w = twiddles(p);
  std::vector<std::complex<double>> out(p);
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p); ++xi) {
    std::complex<double> acc{};
    std::uint32_t idx = 0;  // xi * x mod p
    const auto step = static_cast<std::uint32_t>(xi);
    for (std::uint32_t x = 0; x < p; ++x) {
      acc += f[x] * w[idx];
      idx = add_mod(idx, step, p);
    }
    out[static_cast<std::size_t>(xi)] = acc;
  }
  return DenseFunction(f.field(), std::move(out));
}

DenseFunction dft_indicator(const FpSet& s) {
  const std::uint32_t p = s.p();
  const auto w = twiddles(p);
  const auto elems = s.elements();
  std::vector<std::complex<double>> out(p);
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p); ++xi) {
    std::complex<double> acc{};
    for (std::uint32_t x : elems) acc += w[mul_mod(static_cast<std::uint32_t>(xi), x, p)];
    out[static_cast<std::size_t>(xi)] = acc;
  }
  return DenseFunction(s.field(), std::move(out));
}

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
  if (f.p() != g.p()) throw Error(ErrorCode::FieldMismatch, "convolve");
  const std::uint32_t p = f.p();
  std::vector<std::complex<double>> out(p);
#pragma omp parallel for schedule(static)
  for (std::int64_t xs = 0; xs < static_cast<std::int64_t>(p); ++xs) {
    const auto x = static_cast<std::uint32_t>(xs);
    std::complex<double> acc{};
    for (std::uint32_t y = 0; y < p; ++y) acc += f[y] * g[sub_mod(x, y, p)];
    out[x] = acc;
  }
  return DenseFunction(f.field(), std::move(out));
}

namespace {

std::int64_t sum_of_squares(const std::vector<std::int64_t>& r) {
  std::int64_t s = 0;
  for (auto v : r) s += v * v;
  return s;
}

EnergyReport finish(std::int64_t direct, double spectral, const char* what) {
  EnergyReport rep{direct, spectral, std::abs(static_cast<double>(direct) - spectral) < kRoundingTolerance};
  if (!rep.agreement) {
    throw Error(ErrorCode::SpectralMismatch, std::string(what) + ": direct " + std::to_string(direct) +
                                                 " vs spectral " + std::to_string(spectral));
  }
  return rep;
}

}  // namespace

EnergyReport additive_energy(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const std::int64_t direct = sum_of_squares(sum_representations(a, b));
  const auto fa = dft_indicator(a);
  const auto fb = dft_indicator(b);
  double acc = 0.0;
  for (std::uint32_t xi = 0; xi < a.p(); ++xi) acc += std::norm(fa[xi]) * std::norm(fb[xi]);
  return finish(direct, acc / a.p(), "additive energy");
}

namespace {

// Product representation counts r(s) = #{(a, b) : a b = s}.
std::vector<std::int64_t> product_representations(const FpSet& a, const FpSet& b) {
  const auto& f = *a.field();
  const std::uint32_t p = f.p();
  const std::uint32_t n = p - 1;
  std::vector<std::int64_t> r(p, 0);
  const std::int64_t za = a.contains(0) ? 1 : 0;
  const std::int64_t zb = b.contains(0) ? 1 : 0;
  r[0] = za * static_cast<std::int64_t>(b.size()) + zb * static_cast<std::int64_t>(a.size()) - za * zb;
  // Nonzero products are a cyclic convolution of the log images.
  std::vector<std::uint32_t> la;
  std::vector<std::uint32_t> lb;
  a.for_each([&](std::uint32_t x) { if (x) la.push_back(f.dlog(x)); });
  b.for_each([&](std::uint32_t x) { if (x) lb.push_back(f.dlog(x)); });
  BitVector lb_bits(n);
  for (auto t : lb) lb_bits.set(t);
#pragma omp parallel for schedule(static)
  for (std::int64_t ts = 0; ts < static_cast<std::int64_t>(n); ++ts) {
    const auto t = static_cast<std::uint32_t>(ts);
    std::int64_t c = 0;
    for (auto u : la) c += lb_bits.test(sub_mod(t, u, n)) ? 1 : 0;
    r[f.exp(t)] = c;
  }
  return r;
}

}  // namespace

EnergyReport mult_energy(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const auto r = product_representations(a, b);
  const std::int64_t direct = sum_of_squares(r);

  const auto& f = *a.field();
  const std::uint32_t n = f.p() - 1;
  std::vector<std::complex<double>> w(n);
  for (std::uint32_t t = 0; t < n; ++t) w[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
  std::vector<std::uint32_t> la;
  std::vector<std::uint32_t> lb;
  a.for_each([&](std::uint32_t x) { if (x) la.push_back(f.dlog(x)); });
  b.for_each([&](std::uint32_t x) { if (x) lb.push_back(f.dlog(x)); });
  std::vector<double> terms(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ks = 0; ks < static_cast<std::int64_t>(n); ++ks) {
    const auto k = static_cast<std::uint64_t>(ks);
    std::complex<double> sa{};
    std::complex<double> sb{};
    for (auto t : la) sa += w[k * t % n];
    for (auto t : lb) sb += w[k * t % n];
    terms[static_cast<std::size_t>(ks)] = std::norm(sa) * std::norm(sb);
  }
  double acc = 0.0;
  for (double t : terms) acc += t;
  const double spectral = static_cast<double>(r[0] * r[0]) + acc / n;
  return finish(direct, spectral, "multiplicative energy");
}

std::int64_t count_system(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  if (a.contains(0)) throw Error(ErrorCode::ZeroInA, "count_system divides by elements of A");
  const auto& f = *a.field();
  const std::uint32_t p = f.p();
  const auto ea = a.elements();
  const auto eb = b.elements();
  const std::size_t nb = eb.size();
  std::vector<std::uint64_t> keys(ea.size() * nb * nb);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(ea.size()); ++i) {
    const std::uint32_t inv = f.inverse(ea[static_cast<std::size_t>(i)]);
    std::size_t pos = static_cast<std::size_t>(i) * nb * nb;
    for (auto b1 : eb) {
      const std::uint64_t u1 = mul_mod(b1, inv, p);
      for (auto b2 : eb) keys[pos++] = u1 * p + mul_mod(b2, inv, p);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::int64_t sigma = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    sigma += run * run;
    i = j;
  }
  return sigma;
}

std::int64_t count_skew_products(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.p();
  // T(y) = #{(s, a) in (A+A) x A : s - a = y}
  const auto t = difference_representations(sumset(a, a), a);
  std::vector<std::int64_t> w(p, 0);
  std::int64_t t_nonzero = 0;
  for (std::uint32_t y = 1; y < p; ++y) t_nonzero += t[y];
  std::vector<std::uint32_t> nonzero_b;
  b.for_each([&](std::uint32_t x) { if (x) nonzero_b.push_back(x); });
  w[0] = t[0] * static_cast<std::int64_t>(b.size()) + (b.contains(0) ? t_nonzero : 0);
  for (std::uint32_t y = 1; y < p; ++y) {
    if (t[y] == 0) continue;
    for (auto x : nonzero_b) w[mul_mod(y, x, p)] += t[y];
  }
  return sum_of_squares(w);
}

namespace {

struct DilateTables {
  std::vector<std::int64_t> diffs;     // #{a1 - a2 = t}
  std::vector<std::int64_t> doubled;   // #{a3 + a4 - a5 - a6 = u}
  std::vector<double> power2;          // |A^(x)|^2
};

DilateTables dilate_tables(const FpSet& a) {
  const std::uint32_t p = a.p();
  DilateTables t;
  t.diffs = difference_representations(a, a);
  const auto r2 = sum_representations(a, a);
  std::vector<std::uint32_t> support;
  for (std::uint32_t v = 0; v < p; ++v) if (r2[v]) support.push_back(v);
  t.doubled.assign(p, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t us = 0; us < static_cast<std::int64_t>(p); ++us) {
    const auto u = static_cast<std::uint32_t>(us);
    std::int64_t c = 0;
    for (auto v : support) c += r2[v] * r2[sub_mod(v, u, p)];
    t.doubled[u] = c;
  }
  const auto fa = dft_indicator(a);
  t.power2.resize(p);
  for (std::uint32_t x = 0; x < p; ++x) t.power2[x] = std::norm(fa[x]);
  return t;
}

DilateEqCount dilate_count(const DilateTables& t, std::uint32_t xi, std::uint32_t p) {
  DilateEqCount out;
  for (std::uint32_t d = 0; d < p; ++d) out.count += t.diffs[d] * t.doubled[mul_mod(xi, d, p)];
  double acc = 0.0;
  for (std::uint32_t x = 0; x < p; ++x) acc += t.power2[mul_mod(xi, x, p)] * t.power2[x] * t.power2[x];
  out.spectral_value = acc / p;
  if (std::abs(static_cast<double>(out.count) - out.spectral_value) >= kRoundingTolerance) {
    throw Error(ErrorCode::SpectralMismatch, "dilate equation count " + std::to_string(out.count) +
                                                 " vs spectral " + std::to_string(out.spectral_value));
  }
  return out;
}

}  // namespace

DilateEqCount count_dilate_eq(const FpSet& a, std::uint32_t xi) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "count_dilate_eq");
  return dilate_count(dilate_tables(a), xi % a.p(), a.p());
}

std::vector<DilateEqCount> count_dilate_eq_all(const FpSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "count_dilate_eq_all");
  const std::uint32_t p = a.p();
  const auto t = dilate_tables(a);
  std::vector<DilateEqCount> out(p);
  bool mismatch = false;
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p); ++xi) {
    try {
      out[static_cast<std::size_t>(xi)] = dilate_count(t, static_cast<std::uint32_t>(xi), p);
    } catch (const Error&) {
#pragma omp atomic write
      mismatch = true;
    }
  }
  if (mismatch) throw Error(ErrorCode::SpectralMismatch, "dilate equation sweep");
  return out;
}

}  // namespace fplab
