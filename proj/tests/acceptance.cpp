// Acceptance suite: one PASS/FAIL line per criterion. Optional argv[1] is the
// CLI binary used for the file-level determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fplab/balog.hpp"
#include "fplab/charsum.hpp"
#include "fplab/config.hpp"
#include "fplab/family.hpp"
#include "fplab/incidence.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"
#include "fplab/structure.hpp"
#include "fplab/sweep.hpp"
#include "helpers.hpp"

using namespace fplab;
using testing_helpers::as_set;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t n = std::max(lo, 3u); n <= hi; ++n)
    if (is_prime(n)) v.push_back(n);
  return v;
}

DenseFunction random_function(const FieldRef& f, Rng& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::complex<double>> v(f->p());
  for (auto& x : v) x = {u(rng), u(rng)};
  return DenseFunction(f, v);
}

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

Outcome fourier_core() {
  Outcome o;
  Rng rng(101);
  int pairs = 0;
  for (std::uint32_t p : {7u, 31u, 101u}) {
    auto f = make_field(p);
    for (int i = 0; i < 100; ++i, ++pairs) {
      const auto u = random_function(f, rng);
      const auto v = random_function(f, rng);
      const auto U = dft(u);
      const auto V = dft(v);
      std::complex<double> lhs = 0, rhs = 0;
      for (std::uint32_t x = 0; x < p; ++x) {
        lhs += u[x] * std::conj(v[x]);
        rhs += U[x] * std::conj(V[x]);
      }
      o.require(std::abs(lhs - rhs / static_cast<double>(p)) <= 1e-9 * p, "Plancherel p=" + std::to_string(p));
      const auto C = dft(convolve(u, v));
      double worst = 0;
      for (std::uint32_t x = 0; x < p; ++x) worst = std::max(worst, std::abs(C[x] - U[x] * V[x]));
      o.require(worst <= 1e-9 * p, "convolution theorem p=" + std::to_string(p));
    }
  }
  int energies = 0;
  for (std::uint32_t p : {101u, 499u}) {
    auto f = make_field(p);
    for (int i = 0; i < 50; ++i, ++energies) {
      const auto a = random_subset(f, 1 + rng() % 40, rng);
      const auto b = random_subset(f, 1 + rng() % 40, rng);
      const auto e = additive_energy(a, b);
      o.require(e.agreement && std::llround(e.spectral_value) == e.direct_count, "energy rounding");
      o.require(e.direct_count == oracle::additive_energy(as_set(a), as_set(b), p), "energy oracle");
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " function pairs, " + std::to_string(energies) + " energy pairs";
  return o;
}

Outcome moment_inequality() {
  Outcome o;
  int cases = 0;
  double worst = 0;
  for (auto p : primes_between(7, 97)) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; ++k) {
      const Character chi(f, k);
      for (std::uint32_t r = 1; r <= 2; ++r)
        for (std::uint32_t len = 1; len <= 6; ++len, ++cases) {
          const auto m = moment_sum(chi, FpSet::interval(f, 0, len), r);
          o.require(!m.sampled && m.lhs < m.rhs, "p=" + std::to_string(p) + " k=" + std::to_string(k));
          worst = std::max(worst, m.lhs / m.rhs);
        }
    }
  }
  auto f7 = make_field(7);
  const auto anchor = moment_sum(legendre(f7), FpSet::interval(f7, 0, 2), 1);
  o.require(anchor.exact_lhs == 74 && anchor.rhs == 210.0, "anchor p=7 |I|=2 r=1");
  double brute = 0;
  for (std::int64_t u1 = 0; u1 < 7; ++u1)
    for (std::int64_t u2 = 0; u2 < 7; ++u2) {
      const std::int64_t s = oracle::legendre(u1, 7) * oracle::legendre(u2, 7) +
                             oracle::legendre(u1 + 1, 7) * oracle::legendre(u2 + 1, 7);
      brute += static_cast<double>(s * s);
    }
  o.require(brute == 74.0, "anchor brute force");
  if (o.pass) o.detail = std::to_string(cases) + " tuples, max lhs/rhs " + num(worst) + ", anchor 74 < 210";
  return o;
}

Outcome counting_kernel() {
  Outcome o;
  Rng rng(303);
  const auto primes = primes_between(3, 101);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t p = primes[rng() % primes.size()];
    auto f = make_field(p);
    FpSet a(f);
    while (a.empty()) a = random_subset(f, 1 + rng() % std::min<std::uint32_t>(12, p - 1), rng).without(0);
    const auto b = random_subset(f, 1 + rng() % std::min<std::uint32_t>(12, p), rng);
    o.require(count_system(a, b) == oracle::system(as_set(a), as_set(b), p), "instance " + std::to_string(i));
  }
  auto f5 = make_field(5);
  o.require(count_system(FpSet::of(f5, {1, 2}), FpSet::of(f5, {1, 2})) == 10, "anchor p=5");
  if (o.pass) o.detail = "200 instances, 0 mismatches, anchor 10";
  return o;
}

Outcome rudnev_machinery() {
  Outcome o;
  Rng rng(404);
  const auto primes = primes_between(3, 31);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t p = primes[rng() % primes.size()];
    auto f = make_field(p);
    const PointSet3 pts(f, random_points(p, 1 + rng() % std::min<std::uint64_t>(200, std::uint64_t{p} * p * p), rng));
    const PlaneSet planes(f, random_planes(p, 1 + rng() % std::min<std::uint64_t>(200, std::uint64_t{p} * p * p + p * p + p), rng));
    std::int64_t brute = 0;
    for (const auto& q : pts.points())
      for (const auto& pl : planes.planes()) brute += on_plane(pl, q, p);
    o.require(count_incidences(pts, planes) == brute, "random instance " + std::to_string(i));
  }
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t p = primes_between(5, 31)[rng() % primes_between(5, 31).size()];
    auto f = make_field(p);
    const auto a = random_subset(f, 1 + rng() % 4, rng);
    FpSet b(f);
    while (b.empty()) b = random_subset(f, 1 + rng() % 4, rng).without(0);
    const auto conf = skew_configuration(a, b);
    const auto n = count_incidences(conf.points, conf.planes);
    o.require(n == count_skew_products(a, b) && n == oracle::skew(as_set(a), as_set(b), p),
              "skew instance " + std::to_string(i));
    if (!a.contains(0)) {
      const auto sigma = count_system(a, b);
      o.require(sigma <= static_cast<std::int64_t>(b.size()) * mult_energy(a, b).direct_count, "sigma chain");
    }
  }
  if (o.pass) o.detail = "100 random configurations, 20 skew configurations";
  return o;
}

Outcome dilate_identity() {
  Outcome o;
  Rng rng(505);
  int cases = 0;
  for (std::uint32_t p : {7u, 11u, 13u}) {
    auto f = make_field(p);
    for (int i = 0; i < 20; ++i) {
      const auto a = random_subset(f, 1 + rng() % 6, rng);
      const auto all = count_dilate_eq_all(a);
      const double lower = std::pow(static_cast<double>(a.size()), 6) / p;
      for (std::uint32_t xi = 0; xi < p; ++xi, ++cases) {
        o.require(std::abs(all[xi].count - all[xi].spectral_value) < 0.5, "spectral agreement");
        o.require(all[xi].count >= lower, "lower bound");
        o.require(all[xi].count == oracle::dilate_eq(as_set(a), xi, p), "A^6 oracle");
      }
    }
  }
  auto f5 = make_field(5);
  o.require(count_dilate_eq(FpSet::of(f5, {0, 1}), 1).count == 20, "anchor");
  if (o.pass) o.detail = std::to_string(cases) + " (A, xi) cases, anchor 20";
  return o;
}

Outcome structure_pipeline() {
  Outcome o;
  const char* families[] = {"interval(n=5)", "interval(n=10)", "interval(n=20)", "ap(n=6,step=3,start=1)",
                            "ap(n=10,step=7)", "gap(dims=3:3)", "gap(dims=4:3,steps=1:9)", "random(n=6,seed=1)",
                            "random(n=10,seed=2)", "random(n=15,seed=3)"};
  int cases = 0;
  for (std::uint32_t p : {101u, 499u}) {
    auto f = make_field(p);
    for (const char* fam : families) {
      const auto a = generate(f, fam);
      const auto target = sum_minus(a, 2, 2);
      for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t l = 1; l <= 3; ++l, ++cases) {
          const std::uint32_t k = pipeline_fold(d, l);
          const auto s = sanders_greedy(a, k);
          const std::string tag = std::string(fam) + " p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                  " l=" + std::to_string(l);
          o.require(s.certificate && fold_sum(s.X, k).is_subset_of(target), "certificate " + tag);
          const auto z = extract_z(s.X, d, l);
          o.require(z == reference::extract_z(s.X, d, l), "maximality " + tag);
          o.require(verify_inclusion(z, d, l, target).verified, "inclusion " + tag);
        }
    }
  }
  auto f = make_field(101);
  const auto a = FpSet::interval(f, 0, 10);
  const auto za = extract_z(a, 2, 2);
  o.require(as_set(za) == oracle::centered(-4, 4, 101) && verify_inclusion(za, 2, 2, sum_minus(a, 2, 2)).verified,
            "anchor Z = {-4..4}");
  if (o.pass) o.detail = std::to_string(cases) + " (A, d, l) cases, anchor Z = {-4..4} verified";
  return o;
}

Outcome redei_bound() {
  Outcome o;
  Rng rng(707);
  int paper_failures = 0;
  for (std::uint32_t p : {101u, 499u}) {
    auto f = make_field(p);
    const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(p)));
    for (int i = 0; i < 250; ++i) {
      const auto a = random_subset(f, 2 + rng() % (root - 1), rng);
      const auto r = redei_check(a);
      o.require(r.flag_value("direction_holds"), "random A p=" + std::to_string(p));
      paper_failures += !r.flag_value("paper_holds");
    }
  }
  auto f7 = make_field(7);
  const auto lit = redei_check(FpSet::of(f7, {0, 1}));
  o.require(!lit.flag_value("paper_holds") && lit.flag_value("direction_holds") && lit.integer("quotient_size") == 3,
            "literal failure at {0,1}, p=7");
  if (o.pass) {
    o.detail = "500 random sets; literal bound fails at A={0,1}, p=7 (|Q|=3 < 3.5), flagged; " +
               std::to_string(paper_failures) + " literal failures among random sets";
  }
  return o;
}

Outcome balog_coverage() {
  Outcome o;
  int primes = 0;
  int full_2a2a = 0;
  for (auto p : primes_between(101, 499)) {
    auto f = make_field(p);
    const auto a = generate(f, "interval(n=p^0.5+2)");
    const auto res = balog_new_check(a);
    o.require(res.results[0].covered, "p=" + std::to_string(p));
    full_2a2a += sum_minus(a, 2, 2).size() == p;
    ++primes;
  }
  auto f5 = make_field(5);
  const auto it = balog_iterated(FpSet::of(f5, {0, 1}), 1);
  o.require(!it.coverage.covered && it.coverage.achieved == FpSet::of(f5, {0, 1, 4}), "iterated anchor");
  if (o.pass) {
    o.detail = std::to_string(primes) + " primes covered; 2A-2A = F_p at " + std::to_string(full_2a2a) +
               " of them; (A-A)^3 for {0,1} mod 5 = {0,1,4}";
  }
  return o;
}

Outcome character_exactness() {
  Outcome o;
  int characters = 0;
  for (auto p : primes_between(7, 101)) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; ++k, ++characters) {
      const Character chi(f, k);
      bool mult = true;
      for (std::uint32_t x = 1; x < p; ++x)
        for (std::uint32_t y = 1; y < p; ++y) mult = mult && chi.eval(mul_mod(x, y, p)) == chi.eval(x) * chi.eval(y);
      o.require(mult, "multiplicativity p=" + std::to_string(p));
      std::complex<double> s = 0;
      for (std::uint32_t x = 0; x < p; ++x) s += chi.value(x);
      o.require(std::abs(s) <= 1e-9 * p, "orthogonality p=" + std::to_string(p));
    }
    std::int64_t s = 0;
    const auto leg = legendre(f);
    for (std::uint32_t x = 0; x < p; ++x) s += leg.sign(x);
    o.require(s == 0, "integer Legendre sum");
  }
  for (std::uint32_t p : {7u, 11u, 23u}) {
    const auto leg = legendre(make_field(p));
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        if (a == b) continue;
        std::int64_t s = 0, brute = 0;
        for (std::uint32_t u = 0; u < p; ++u) {
          s += leg.sign((u + a) % p) * leg.sign((u + b) % p);
          brute += oracle::legendre(u + a, p) * oracle::legendre(u + b, p);
        }
        o.require(s == -1 && brute == -1, "pair identity p=" + std::to_string(p));
      }
  }
  if (o.pass) o.detail = std::to_string(characters) + " characters; pair identity at p = 7, 11, 23";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const char* cli) {
  Outcome o;
  const std::string config =
      "sweep = paley\nrange.p = 101, 199\nrange.A = interval(n=p^0.6), random(n=12)\nrange.B = ap(n=9,step=2)\n"
      "char = legendre\nseed = 42\n";
  const auto c = Config::parse(config);
  const auto serial = to_json(run_experiment(c, 1));
  o.require(serial == to_json(run_experiment(c, 1)), "repeat with 1 worker");
  o.require(serial == to_json(run_experiment(c, 8)), "8 workers");
  std::string files = "in-process";
  if (cli != nullptr) {
    const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    const std::string cfg = dir + "/fplab_acceptance.cfg";
    std::ofstream(cfg) << config;
    std::string out[4];
    int rc = 0;
    for (int i = 0; i < 4; ++i) {
      out[i] = dir + "/fplab_acceptance_" + std::to_string(i) + ".json";
      const std::string cmd = std::string(cli) + " --jobs " + (i % 2 ? "8" : "1") + " --json " + out[i] + " sweep " + cfg;
      rc |= std::system(cmd.c_str());
    }
    o.require(rc == 0, "cli exit status");
    const auto ref = slurp(out[0]);
    for (int i = 1; i < 4; ++i) o.require(!ref.empty() && slurp(out[i]) == ref, "file " + std::to_string(i));
    files = "4 CLI report files";
  }
  if (o.pass) o.detail = files + " byte-identical under 1 and 8 workers";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Fourier core", 10, fourier_core},
      {2, "moment inequality", 60, moment_inequality},
      {3, "counting kernel", 0, counting_kernel},
      {4, "incidence machinery", 0, rudnev_machinery},
      {5, "dilate equation identity", 0, dilate_identity},
      {6, "structure pipeline", 30, structure_pipeline},
      {7, "quotient direction bound", 0, redei_bound},
      {8, "coverage", 0, balog_coverage},
      {9, "character exactness", 0, character_exactness},
      {10, "determinism", 0, [cli] { return determinism(cli); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.detail += " (over the " + num(c.limit) + " s limit)";
    }
    all = all && o.pass;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
