#include "fplab/verify.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "fplab/balog.hpp"
#include "fplab/charsum.hpp"
#include "fplab/config.hpp"
#include "fplab/expr.hpp"
#include "fplab/family.hpp"
#include "fplab/incidence.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"
#include "fplab/structure.hpp"
#include "fplab/sweep.hpp"

namespace fplab {

std::vector<std::uint32_t> verify_moduli(bool minimal) {
  if (minimal) return {7};
  return {7, 11, 13, 31, 101};
}

namespace {

using cd = std::complex<double>;

struct Tally {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

struct Ctx {
  FieldRef field;
  std::uint32_t p;
  Rng& rng;
  bool minimal;
  std::function<FieldRef(std::uint64_t)> make;

  // Random trial count, scaled down in minimal mode.
  int trials(int n) const { return minimal ? std::max(1, n / 10) : n; }
  FpSet random_set(std::size_t lo, std::size_t hi) {
    hi = std::min<std::size_t>(hi, p);
    lo = std::min(lo, hi);
    const std::size_t n = lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    return random_subset(field, n, rng);
  }
  std::uint32_t element() { return static_cast<std::uint32_t>(rng() % p); }
  std::uint32_t unit() { return 1 + static_cast<std::uint32_t>(rng() % (p - 1)); }
  // Nontrivial characters: every one for small p, a sample otherwise.
  std::vector<std::uint32_t> characters(std::uint32_t limit) {
    std::vector<std::uint32_t> ks;
    if (p - 2 <= limit) {
      for (std::uint32_t k = 1; k + 1 < p; ++k) ks.push_back(k);
    } else {
      ks.push_back((p - 1) / 2);
      while (ks.size() < limit) ks.push_back(1 + static_cast<std::uint32_t>(rng() % (p - 2)));
    }
    return ks;
  }
};

using Property = std::function<void(Ctx&, Tally&)>;

bool close(cd a, cd b, double tol) { return std::abs(a - b) <= tol; }

// ---- field ----------------------------------------------------------------

void dlog_roundtrip(Ctx& c, Tally& t) {
  const auto& f = *c.field;
  std::vector<bool> seen(c.p, false);
  for (std::uint32_t x = 1; x < c.p; ++x) {
    const std::uint32_t d = f.dlog(x);
    const bool in_range = d + 1 < c.p;
    t.check(in_range && pow_mod(f.generator(), d, c.p) == x && !seen[d]);
    if (in_range) seen[d] = true;
  }
}

void generator_primitive(Ctx& c, Tally& t) {
  bool ok = true;
  for (auto q : prime_factors(c.p - 1)) ok = ok && pow_mod(c.field->generator(), (c.p - 1) / q, c.p) != 1;
  t.check(ok);
}

void multiplicativity(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 5 : 12)) {
    const Character chi(c.field, k);
    bool ok = true;
    for (std::uint32_t x = 1; x < c.p; ++x) {
      for (std::uint32_t y = 1; y < c.p; ++y) ok = ok && chi.eval(mul_mod(x, y, c.p)) == chi.eval(x) * chi.eval(y);
    }
    t.check(ok && chi.eval(0).is_zero());
  }
}

void orthogonality(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 5 : 40)) {
    const Character chi(c.field, k);
    cd s = 0;
    for (std::uint32_t x = 0; x < c.p; ++x) s += chi.value(x);
    t.check(std::abs(s) <= 1e-9 * c.p);
  }
  const Character leg = legendre(c.field);
  std::int64_t s = 0;
  for (std::uint32_t x = 0; x < c.p; ++x) s += leg.sign(x);
  t.check(s == 0);
}

void conjugate(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 5 : 12)) {
    const Character chi(c.field, k);
    const Character bar = chi.conjugate();
    bool ok = true;
    for (std::uint32_t x = 1; x < c.p; ++x) {
      const auto u = chi.eval(x);
      const auto v = bar.eval(x);
      ok = ok && (u.index() + v.index()) % u.modulus() == 0 && (u * v).index() == 0;
      ok = ok && std::abs(std::abs(u.to_complex()) - 1.0) < 1e-12;
    }
    t.check(ok);
  }
}

// ---- setalg ---------------------------------------------------------------

void cauchy_davenport(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(50); ++i) {
    const auto a = c.random_set(1, c.p);
    const auto b = c.random_set(1, c.p);
    t.check(sumset(a, b).size() >= std::min<std::size_t>(c.p, a.size() + b.size() - 1));
  }
}

void monotonicity(Ctx& c, Tally& t) {
  static const char* exprs[] = {"A+A", "A-A", "A*A", "(A-A)/(A-A)", "3·A+A", "2A-A", "A^2", "(A-A)^2(A-A)"};
  for (int i = 0; i < c.trials(20); ++i) {
    const auto small = c.random_set(1, std::min<std::uint32_t>(c.p, 12));
    const auto big = small.set_union(c.random_set(0, std::min<std::uint32_t>(c.p, 12)));
    for (const char* e : exprs) {
      t.check(eval_expr(e, {{"A", small}}).is_subset_of(eval_expr(e, {{"A", big}})));
    }
  }
}

void plunnecke(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(30); ++i) {
    const auto a = c.random_set(1, std::min<std::uint32_t>(c.p, 20));
    const double K = doubling(a).value();
    t.check(static_cast<double>(sum_minus(a, 3, 2).size()) <= std::pow(K, 5) * a.size() + 1e-9);
  }
  const auto iv = generate(c.field, "interval(n=p^0.5)");
  t.check(static_cast<double>(sum_minus(iv, 3, 2).size()) <= std::pow(doubling(iv).value(), 5) * iv.size() + 1e-9);
}

void commutativity(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(30); ++i) {
    const auto a = c.random_set(0, c.p);
    const auto b = c.random_set(0, c.p);
    const auto d = c.random_set(0, c.p);
    t.check(sumset(a, b) == sumset(b, a) && product_set(a, b) == product_set(b, a) &&
            sumset(sumset(a, b), d) == sumset(a, sumset(b, d)) &&
            product_set(product_set(a, b), d) == product_set(a, product_set(b, d)));
  }
}

void dilate_identity(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(30); ++i) {
    const auto a = c.random_set(0, c.p);
    const std::uint32_t lambda = c.unit();
    t.check(dilate(a, 1) == a && dilate(dilate(a, lambda), c.field->inverse(lambda)) == a);
  }
}

void set_oracle(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(30); ++i) {
    const auto a = c.random_set(0, std::min<std::uint32_t>(c.p, 30));
    const auto b = c.random_set(0, std::min<std::uint32_t>(c.p, 30));
    t.check(sumset(a, b) == reference::sumset(a, b) && product_set(a, b) == reference::product_set(a, b) &&
            quotient_set(a, b) == reference::quotient_set(a, b));
  }
}

void doubling_range(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(30); ++i) {
    const auto a = c.random_set(1, c.p);
    const auto K = doubling(a);
    t.check(K.value() >= 1.0 && K.value() <= static_cast<double>(a.size()));
  }
}

// ---- spectral -------------------------------------------------------------

DenseFunction random_function(Ctx& c) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(c.p);
  for (auto& x : v) x = {u(c.rng), u(c.rng)};
  return DenseFunction(c.field, std::move(v));
}

double max_abs(const DenseFunction& f) {
  double m = 0;
  for (auto v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

void plancherel(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(20); ++i) {
    const auto f = random_function(c);
    const auto g = random_function(c);
    const auto F = dft(f);
    const auto G = dft(g);
    cd lhs = 0;
    cd rhs = 0;
    for (std::uint32_t x = 0; x < c.p; ++x) {
      lhs += f[x] * std::conj(g[x]);
      rhs += F[x] * std::conj(G[x]);
    }
    rhs /= static_cast<double>(c.p);
    t.check(close(lhs, rhs, 1e-9 * c.p * max_abs(f) * max_abs(g)));
  }
}

void convolution_theorem(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(20); ++i) {
    const auto f = random_function(c);
    const auto g = random_function(c);
    const auto lhs = dft(convolve(f, g));
    const auto F = dft(f);
    const auto G = dft(g);
    const double scale = c.p * max_abs(F) * max_abs(G);
    bool ok = true;
    for (std::uint32_t x = 0; x < c.p; ++x) ok = ok && close(lhs[x], F[x] * G[x], 1e-9 * scale);
    t.check(ok);
  }
}

void energy_identity(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(20); ++i) {
    const auto a = c.random_set(0, std::min<std::uint32_t>(c.p, 25));
    const auto b = c.random_set(0, std::min<std::uint32_t>(c.p, 25));
    const auto e = additive_energy(a, b);
    const auto m = mult_energy(a, b);
    t.check(e.agreement && m.agreement && e.direct_count == reference::additive_energy(a, b) &&
            m.direct_count == reference::mult_energy(a, b));
  }
}

void system_oracle(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(20); ++i) {
    const auto a = c.random_set(1, std::min<std::uint32_t>(c.p - 1, 8)).without(0);
    const auto b = c.random_set(0, std::min<std::uint32_t>(c.p, 8));
    if (a.empty()) continue;
    t.check(count_system(a, b) == reference::count_system(a, b));
  }
}

void dilate_eq_bound(Ctx& c, Tally& t) {
  if (c.p > 31) return;  // A^6 oracle
  for (int i = 0; i < c.trials(5); ++i) {
    const auto a = c.random_set(1, std::min<std::uint32_t>(c.p, 6));
    const auto all = count_dilate_eq_all(a);
    const double lower = std::pow(static_cast<double>(a.size()), 6) / c.p;
    for (std::uint32_t xi = 0; xi < c.p; ++xi) {
      t.check(all[xi].count + 1e-9 >= lower && std::abs(all[xi].count - all[xi].spectral_value) < kRoundingTolerance &&
              (xi > 3 || all[xi].count == reference::count_dilate_eq(a, xi)));
    }
  }
}

void cauchy_schwarz(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(20); ++i) {
    const auto a = c.random_set(1, std::min<std::uint32_t>(c.p, 25));
    const auto b = c.random_set(1, std::min<std::uint32_t>(c.p, 25));
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    t.check(static_cast<double>(additive_energy(a, b).direct_count) * sumset(a, b).size() >= na * na * nb * nb);
  }
}

// ---- charsum --------------------------------------------------------------

void trivial_bound(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 3 : 8)) {
    const Character chi(c.field, k);
    for (int i = 0; i < c.trials(10); ++i) {
      const auto a = c.random_set(1, c.p);
      const auto b = c.random_set(1, c.p);
      const auto s = character_sum(chi, a, b);
      bool ok = s.normalized >= 0.0 && s.normalized <= 1.0;
      if (chi.is_quadratic()) ok = ok && s.exact.has_value();
      ok = ok && close(s.value, reference::character_sum(chi, a, b), 1e-9 * a.size() * b.size());
      t.check(ok);
    }
    // equality case: a single term
    const auto one = FpSet::of(c.field, {1});
    t.check(std::abs(character_sum(chi, one, one).normalized - 1.0) < 1e-12);
  }
}

void conjugation(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 3 : 8)) {
    const Character chi(c.field, k);
    const auto a = c.random_set(1, c.p);
    const auto b = c.random_set(1, c.p);
    const auto s = character_sum(chi, a, b).value;
    const auto sb = character_sum(chi.conjugate(), a, b).value;
    t.check(close(sb, std::conj(s), 1e-9 * a.size() * b.size()));
  }
}

void translation(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 3 : 8)) {
    const Character chi(c.field, k);
    const auto a = c.random_set(1, c.p);
    const auto b = c.random_set(1, c.p);
    const auto s = character_sum(chi, a, b).value;
    for (std::uint32_t shift = 0; shift < c.p; ++shift) {
      const auto st = character_sum(chi, a.translate(-static_cast<std::int64_t>(shift)), b.translate(shift)).value;
      t.check(close(s, st, 1e-9 * a.size() * b.size()));
    }
  }
}

void lemma1(Ctx& c, Tally& t) {
  if (c.p > 101) return;
  for (auto k : c.characters(c.minimal ? 5 : 6)) {
    const Character chi(c.field, k);
    for (std::uint32_t r = 1; r <= 2; ++r) {
      for (std::uint32_t len = 1; len <= std::min<std::uint32_t>(6, c.p); ++len) {
        const auto m = moment_sum(chi, FpSet::interval(c.field, 0, len), r);
        bool ok = !m.sampled && m.holds;
        if (c.p <= 13) ok = ok && std::abs(m.lhs - reference::moment_lhs(chi, FpSet::interval(c.field, 0, len), r)) < 1e-6 * m.lhs + 1e-6;
        t.check(ok);
      }
    }
  }
}

void complete_sum(Ctx& c, Tally& t) {
  for (auto k : c.characters(c.minimal ? 5 : 10)) {
    const auto s = character_sum(Character(c.field, k), FpSet::full(c.field), FpSet::of(c.field, {0}));
    t.check(s.magnitude < 1e-9 * c.p);
  }
}

void legendre_pair(Ctx& c, Tally& t) {
  if (c.p > 31) return;
  const Character chi = legendre(c.field);
  for (std::uint32_t a = 0; a < c.p; ++a) {
    for (std::uint32_t b = 0; b < c.p; ++b) {
      if (a == b) continue;
      std::int64_t s = 0;
      for (std::uint32_t u = 0; u < c.p; ++u) s += chi.sign(add_mod(u, a, c.p)) * chi.sign(add_mod(u, b, c.p));
      t.check(s == -1);
    }
  }
}

// ---- incidence ------------------------------------------------------------

void grouped_oracle(Ctx& c, Tally& t) {
  if (c.p > 31) return;
  for (int i = 0; i < c.trials(20); ++i) {
    const std::size_t n = 1 + c.rng() % (c.minimal ? 40 : 200);
    const std::size_t m = 1 + c.rng() % (c.minimal ? 40 : 200);
    const PointSet3 pts(c.field, random_points(c.p, n, c.rng));
    const PlaneSet planes(c.field, random_planes(c.p, m, c.rng));
    t.check(count_incidences(pts, planes) == reference::count_incidences(pts, planes));
  }
}

AffineMap3 random_affine(Ctx& c) {
  for (;;) {
    AffineMap3 map;
    for (auto& row : map.M) {
      for (auto& x : row) x = c.element();
    }
    for (auto& x : map.v) x = c.element();
    try {
      inverse_matrix(map.M, c.p);
      return map;
    } catch (const Error&) {
    }
  }
}

void affine_invariance(Ctx& c, Tally& t) {
  if (c.p > 31) return;
  for (int i = 0; i < c.trials(20); ++i) {
    const PointSet3 pts(c.field, random_points(c.p, 60, c.rng));
    const PlaneSet planes(c.field, random_planes(c.p, 60, c.rng));
    const auto map = random_affine(c);
    t.check(count_incidences(pts, planes) == count_incidences(transform(map, pts), transform(map, planes)));
  }
}

void skew_collinear(Ctx& c, Tally& t) {
  if (c.p > 31) return;
  for (int i = 0; i < c.trials(10); ++i) {
    const auto a = c.random_set(1, 4);
    const auto b = c.random_set(1, 4).without(0);
    if (b.empty()) continue;
    const auto pts = skew_points(a, b);
    const auto k = max_collinear(pts);
    t.check(k == reference::max_collinear(pts) &&
            k == static_cast<std::int64_t>(std::max(b.size(), sumset(a, a).size())));
  }
}

void skew_correspondence(Ctx& c, Tally& t) {
  if (c.p > 31) return;
  for (int i = 0; i < c.trials(10); ++i) {
    const auto a = c.random_set(1, 4);
    const auto b = c.random_set(1, 4).without(0);
    if (b.empty()) continue;
    const auto conf = skew_configuration(a, b);
    const auto n = count_incidences(conf.points, conf.planes);
    t.check(n == count_skew_products(a, b) && n == reference::count_skew_products(a, b));
  }
}

// ---- structure ------------------------------------------------------------

std::vector<FpSet> structure_suite(Ctx& c) {
  std::vector<FpSet> sets;
  const char* fams[] = {"interval(n=5)", "interval(n=10)", "ap(n=6,step=3,start=1)", "gap(dims=3:2)"};
  for (const char* f : fams) {
    try {
      sets.push_back(generate(c.field, f));
    } catch (const Error&) {
    }
  }
  sets.push_back(c.random_set(3, 8));
  return sets;
}

void pipeline(Ctx& c, Tally& t) {
  for (const auto& a : structure_suite(c)) {
    for (std::int64_t d = 2; d <= 3; ++d) {
      for (std::int64_t l = 1; l <= (c.minimal ? 2 : 3); ++l) {
        const auto s = sanders_greedy(a, pipeline_fold(d, l));
        const auto z = extract_z(s.X, d, l);
        t.check(s.certificate && verify_inclusion(z, d, l, s.target).verified);
      }
    }
  }
}

void z_maximal(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(10); ++i) {
    const auto x = c.random_set(1, c.p / 3 + 1);
    const auto diff = difference_set(x, x);
    for (std::int64_t d = 2; d <= 3; ++d) {
      for (std::int64_t l = 1; l <= 3; ++l) {
        const auto z = extract_z(x, d, l);
        bool ok = z == reference::extract_z(x, d, l) && extract_z(x, d, l + 1).is_subset_of(z);
        for (std::uint32_t w = 0; w < c.p && ok; ++w) {
          bool all = true;
          std::uint32_t m = 1;
          for (std::int64_t j = 0; j < l; ++j) {
            all = all && diff.contains(mul_mod(m, w, c.p));
            m = mul_mod(m, static_cast<std::uint32_t>(d % c.p), c.p);
          }
          ok = all == z.contains(w);
        }
        t.check(ok);
      }
    }
  }
}

void sanders_certificate(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(10); ++i) {
    const auto a = c.random_set(2, 10);
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(c.rng() % 5);
    const auto s = sanders_greedy(a, k);
    t.check(s.certificate && s.X.is_subset_of(difference_set(a, a)) &&
            fold_sum(s.X, k).is_subset_of(sum_minus(a, 2, 2)));
  }
}

void bsg_structure(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(10); ++i) {
    const auto a = c.random_set(1, 20);
    const auto r = bsg_extract(a);
    t.check(!r.subset.empty() && r.subset.is_subset_of(a) && bsg_extract(a).subset == r.subset);
  }
  const auto full = FpSet::full(c.field);
  t.check(bsg_extract(full).subset == full);
}

// ---- balog ----------------------------------------------------------------

std::vector<std::string> expressions() {
  std::vector<std::string> e(kBalogExpressions.begin(), kBalogExpressions.end());
  e.push_back("(A-A)^3");
  return e;
}

void coverage_monotone(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(5); ++i) {
    const auto a = c.random_set(2, 5);
    const auto big = a.set_union(c.random_set(0, 4));
    for (const auto& e : expressions()) t.check(coverage(e, a).achieved.is_subset_of(coverage(e, big).achieved));
  }
}

void dilation_invariance(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(5); ++i) {
    const auto a = c.random_set(2, 6);
    const std::uint32_t lambda = c.unit();
    const auto x = balog_new_check(a);
    const auto y = balog_new_check(dilate(a, lambda));
    bool ok = true;
    for (std::size_t j = 0; j < x.results.size(); ++j) ok = ok && x.results[j].covered == y.results[j].covered;
    t.check(ok);
  }
}

void translation_invariance(Ctx& c, Tally& t) {
  for (int i = 0; i < c.trials(5); ++i) {
    const auto a = c.random_set(2, 6);
    const auto shifted = a.translate(c.element());
    for (const auto& e : expressions()) t.check(coverage(e, a).achieved == coverage(e, shifted).achieved);
  }
}

void redei_direction(Ctx& c, Tally& t) {
  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(c.p)));
  if (root < 2) return;
  for (int i = 0; i < c.trials(30); ++i) {
    t.check(redei_check(c.random_set(2, root)).flag_value("direction_holds"));
  }
  t.check(redei_check(FpSet::interval(c.field, 0, root)).flag_value("direction_holds"));
}

void qr_decomposition(Ctx& c, Tally& t) {
  const auto qr = generate(c.field, "quadratic_residues");
  for (int i = 0; i < c.trials(20); ++i) {
    const auto a = c.random_set(1, 3);
    const auto b = c.random_set(1, 3);
    const auto r = qr_decomposition_check(a, b);
    const bool in = sumset(a, b).is_subset_of(qr);
    t.check(r.flag_value("sums_in_qr") == in && (!in || r.flag_value("inequality_holds")));
  }
}

// ---- lab ------------------------------------------------------------------

void generator_contracts(Ctx& c, Tally& t) {
  const std::uint32_t n = std::min<std::uint32_t>(c.p, 5);
  t.check(generate(c.field, "interval(n=" + std::to_string(n) + ")").size() == n);
  t.check(generate(c.field, "quadratic_residues").size() == (c.p - 1) / 2);
  for (std::uint32_t m = 1; m < c.p; ++m) {
    if ((c.p - 1) % m != 0) continue;
    const auto h = generate(c.field, "mult_subgroup(order=" + std::to_string(m) + ")");
    t.check(h.size() == m && product_set(h, h) == h);
  }
  const std::string rnd = "random(n=" + std::to_string(c.p / 2) + ",seed=9)";
  t.check(generate(c.field, rnd) == generate(c.field, rnd));
}

void report_roundtrip(Ctx& c, Tally& t) {
  const auto r = paley_profile(legendre(c.field), c.random_set(1, c.p), c.random_set(1, c.p));
  t.check(report_from_json(to_json(r)) == r);
}

void determinism(Ctx& c, Tally& t) {
  if (c.p > 13) return;
  auto cfg = Config::parse("sweep = paley\nrange.p = " + std::to_string(c.p) +
                           "\nrange.A = interval(n=3), random(n=4)\nchar = all\n");
  t.check(to_json(run_experiment(cfg, 1)) == to_json(run_experiment(cfg, 3)));
}

struct Entry {
  const char* name;
  Property run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"field.dlog_roundtrip", dlog_roundtrip},
      {"field.generator_primitive", generator_primitive},
      {"field.multiplicativity", multiplicativity},
      {"field.orthogonality", orthogonality},
      {"field.conjugate", conjugate},
      {"setalg.cauchy_davenport", cauchy_davenport},
      {"setalg.monotonicity", monotonicity},
      {"setalg.plunnecke", plunnecke},
      {"setalg.commutativity", commutativity},
      {"setalg.dilate_identity", dilate_identity},
      {"setalg.oracle", set_oracle},
      {"setalg.doubling_range", doubling_range},
      {"spectral.plancherel", plancherel},
      {"spectral.convolution", convolution_theorem},
      {"spectral.energy_identity", energy_identity},
      {"spectral.system_oracle", system_oracle},
      {"spectral.dilate_eq_bound", dilate_eq_bound},
      {"spectral.cauchy_schwarz", cauchy_schwarz},
      {"charsum.trivial_bound", trivial_bound},
      {"charsum.conjugation", conjugation},
      {"charsum.translation", translation},
      {"charsum.moment_inequality", lemma1},
      {"charsum.complete_sum", complete_sum},
      {"charsum.legendre_pair", legendre_pair},
      {"incidence.grouped_oracle", grouped_oracle},
      {"incidence.affine_invariance", affine_invariance},
      {"incidence.skew_collinear", skew_collinear},
      {"incidence.skew_correspondence", skew_correspondence},
      {"structure.pipeline", pipeline},
      {"structure.z_maximal", z_maximal},
      {"structure.sanders_certificate", sanders_certificate},
      {"structure.bsg", bsg_structure},
      {"balog.coverage_monotone", coverage_monotone},
      {"balog.dilation_invariance", dilation_invariance},
      {"balog.translation_invariance", translation_invariance},
      {"balog.redei_direction", redei_direction},
      {"balog.qr_decomposition", qr_decomposition},
      {"lab.generator_contracts", generator_contracts},
      {"lab.report_roundtrip", report_roundtrip},
      {"lab.determinism", determinism},
  };
  return r;
}

}  // namespace

Report verify_suite(const VerifyOptions& opts) {
  auto make = opts.field_factory ? opts.field_factory : [](std::uint64_t p) { return make_field(p); };
  std::map<std::string, Tally> tallies;
  Report rep;
  rep.kind = "verify";
  rep.input("minimal", static_cast<std::int64_t>(opts.minimal)).input("seed", static_cast<std::int64_t>(opts.seed));
  for (auto p : verify_moduli(opts.minimal)) {
    const FieldRef field = make(p);
    for (const auto& e : registry()) {
      Rng rng(opts.seed * 0x9E3779B97F4A7C15ULL + p);
      Ctx c{field, p, rng, opts.minimal, make};
      Tally& t = tallies[e.name];
      try {
        e.run(c, t);
      } catch (const std::exception& ex) {
        ++t.cases;
        ++t.failures;
        rep.note(std::string(e.name) + " p=" + std::to_string(p) + ": " + ex.what());
      }
    }
  }
  std::int64_t failed = 0;
  for (const auto& [name, t] : tallies) {
    rep.quantity(name + "_cases", t.cases).quantity(name + "_failures", t.failures);
    rep.flag(name + "_pass", t.failures == 0 && t.cases > 0);
    if (t.failures != 0 || t.cases == 0) ++failed;
  }
  rep.quantity("properties", static_cast<std::int64_t>(tallies.size())).quantity("failed_properties", failed);
  return rep;
}

}  // namespace fplab
