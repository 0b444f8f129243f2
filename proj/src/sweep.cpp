#include "fplab/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "fplab/balog.hpp"
#include "fplab/charsum.hpp"
#include "fplab/family.hpp"
#include "fplab/incidence.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"
#include "fplab/structure.hpp"

namespace fplab {

std::vector<Report> run_jobs(const std::vector<std::function<Report()>>& jobs, unsigned workers,
                             const std::string& kind) {
  std::vector<Report> out(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  auto worker = [&] {
    // Parallelism stays at job granularity when several workers run.
    if (n > 1) omp_set_num_threads(1);
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
        out[i].flag("job_pass", true);
      } catch (const std::exception& e) {
        Report r;
        r.kind = kind;
        r.note(std::string("error: ") + e.what());
        r.flag("job_pass", false);
        out[i] = std::move(r);
      }
    }
  };
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

struct Common {
  std::vector<std::int64_t> primes;
  std::uint64_t seed;
  std::string timestamp;
};

Common common(const Config& c) {
  Common out{expand_primes(c.list("range.p")), c.get_u64("seed", 1), c.get_or("timestamp", "unset")};
  if (out.primes.empty()) throw Error(ErrorCode::BadConfig, "range.p lists no odd primes");
  return out;
}

std::vector<std::string> families(const Config& c, const std::string& key, const std::string& fallback) {
  auto v = c.list(key);
  if (v.empty()) v.push_back(fallback);
  for (const auto& f : v) Family::parse(f);  // validate up front
  return v;
}

std::vector<std::int64_t> ints(const Config& c, const std::string& key, std::vector<std::int64_t> fallback) {
  auto v = expand_integers(c.list(key));
  return v.empty() ? fallback : v;
}

// Character indices for one modulus: legendre, all, or explicit list.
std::vector<std::uint32_t> characters(const Config& c, std::uint32_t p, const std::string& fallback) {
  std::vector<std::uint32_t> ks;
  if (c.has("range.char")) {
    for (auto k : expand_integers(c.list("range.char"))) ks.push_back(static_cast<std::uint32_t>(k));
    return ks;
  }
  const std::string mode = c.get_or("char", fallback);
  if (mode == "legendre") return {(p - 1) / 2};
  if (mode == "all") {
    for (std::uint32_t k = 1; k + 1 < p; ++k) ks.push_back(k);
    return ks;
  }
  throw Error(ErrorCode::BadConfig, "char must be legendre or all, got " + mode);
}

Report stamp(Report r, const Common& cm, std::int64_t p) {
  r.timestamp = cm.timestamp;
  r.input("p", p);
  return r;
}

std::vector<std::function<Report()>> paley_jobs(const Config& c, const Common& cm) {
  const auto as = families(c, "range.A", "interval(n=p^0.6)");
  const auto bs = c.list("range.B").empty() ? as : families(c, "range.B", "");
  PaleyOptions opts{c.get_real("delta", 0.5), c.get_real("c", 1.0)};
  std::vector<std::function<Report()>> jobs;
  for (auto p : cm.primes) {
    for (const auto& fa : as) {
      for (const auto& fb : bs) {
        for (auto k : characters(c, static_cast<std::uint32_t>(p), "legendre")) {
          jobs.push_back([=] {
            const auto field = make_field(static_cast<std::uint64_t>(p));
            const auto a = generate(field, fa, cm.seed);
            const auto b = generate(field, fb, cm.seed);
            Report r = paley_profile(Character(field, k), a, b, opts);
            r.input("A", fa).input("B", fb).input("seed", static_cast<std::int64_t>(cm.seed));
            return stamp(std::move(r), cm, p);
          });
        }
      }
    }
  }
  return jobs;
}

std::vector<std::function<Report()>> moment_jobs(const Config& c, const Common& cm) {
  const auto rs = ints(c, "range.r", {1, 2});
  const auto lens = ints(c, "range.I", {1, 2, 3, 4, 5, 6});
  std::vector<std::function<Report()>> jobs;
  for (auto p : cm.primes) {
    const auto ks = characters(c, static_cast<std::uint32_t>(p), "all");
    for (auto r : rs) {
      for (auto len : lens) {
        jobs.push_back([=] {
          const auto field = make_field(static_cast<std::uint64_t>(p));
          if (len < 1 || len > p) throw Error(ErrorCode::BadConfig, "interval length outside [1, p]");
          const auto interval = FpSet::interval(field, 0, static_cast<std::uint32_t>(len));
          double max_ratio = 0.0;
          bool holds = true;
          bool sampled = false;
          for (auto k : ks) {
            const auto m = moment_sum(Character(field, k), interval, static_cast<std::uint32_t>(r));
            max_ratio = std::max(max_ratio, m.lhs / m.rhs);
            holds = holds && m.holds;
            sampled = sampled || m.sampled;
          }
          const auto leg = moment_sum(legendre(field), interval, static_cast<std::uint32_t>(r));
          Report rep;
          rep.kind = "moment";
          rep.input("r", r).input("interval_len", len);
          rep.quantity("characters", static_cast<std::int64_t>(ks.size()))
              .quantity("max_ratio", max_ratio)
              .quantity("rhs", leg.rhs)
              .quantity("legendre_lhs", leg.lhs);
          rep.flag("holds", holds).flag("sampled", sampled);
          return stamp(std::move(rep), cm, p);
        });
      }
    }
  }
  return jobs;
}

std::vector<std::function<Report()>> system_jobs(const Config& c, const Common& cm) {
  const auto as = families(c, "range.A", "ap(start=1,step=1,n=p^0.4)");
  const auto bs = c.list("range.B").empty() ? as : families(c, "range.B", "");
  std::vector<std::function<Report()>> jobs;
  for (auto p : cm.primes) {
    for (const auto& fa : as) {
      for (const auto& fb : bs) {
        jobs.push_back([=] {
          const auto field = make_field(static_cast<std::uint64_t>(p));
          auto a = generate(field, fa, cm.seed);
          const auto b = generate(field, fb, cm.seed);
          Report rep;
          rep.kind = "system";
          if (a.contains(0)) {
            a = a.without(0);
            rep.note("0 removed from A");
          }
          const std::int64_t sigma = count_system(a, b);
          const auto emult = mult_energy(a, b);
          const auto K = doubling(a);
          const auto L = doubling(b);
          BoundParams bp;
          bp.p = static_cast<double>(p);
          bp.K = K.value();
          bp.L = L.value();
          bp.size_a = static_cast<double>(a.size());
          bp.size_b = static_cast<double>(b.size());
          const double general = bound_eval(BoundName::Cor1General, bp);
          const double small = bound_eval(BoundName::Cor1SmallDoubling, bp);
          rep.input("A", fa).input("B", fb).input("seed", static_cast<std::int64_t>(cm.seed));
          rep.quantity("sigma", sigma)
              .quantity("mult_energy", emult.direct_count)
              .quantity("size_a", static_cast<std::int64_t>(a.size()))
              .quantity("size_b", static_cast<std::int64_t>(b.size()))
              .quantity("K", K.value())
              .quantity("L", L.value())
              .quantity("cor1_general", general)
              .quantity("cor1_small_doubling", small)
              .quantity("ratio_general", sigma / general)
              .quantity("ratio_small_doubling", sigma / small);
          rep.flag("sigma_le_b_emult_holds", sigma <= static_cast<std::int64_t>(b.size()) * emult.direct_count);
          if (a.size() <= 12 && b.size() <= 12) {
            rep.flag("oracle_holds", reference::count_system(a, b) == sigma);
          }
          return stamp(std::move(rep), cm, p);
        });
      }
    }
  }
  return jobs;
}

std::vector<std::function<Report()>> incidence_jobs(const Config& c, const Common& cm) {
  const std::string mode = c.get_or("mode", "skew");
  std::vector<std::function<Report()>> jobs;
  if (mode == "skew") {
    const auto as = families(c, "range.A", "interval(n=3)");
    const auto bs = c.list("range.B").empty() ? as : families(c, "range.B", "");
    for (auto p : cm.primes) {
      for (const auto& fa : as) {
        for (const auto& fb : bs) {
          jobs.push_back([=] {
            const auto field = make_field(static_cast<std::uint64_t>(p));
            const auto a = generate(field, fa, cm.seed);
            const auto b = generate(field, fb, cm.seed).without(0);
            const auto conf = skew_configuration(a, b);
            Report rep = rudnev_gap(conf.points, conf.planes);
            const auto solutions = count_skew_products(a, b);
            const auto k_expected = std::max({a.size(), b.size(), sumset(a, a).size()});
            rep.input("A", fa).input("B", fb).input("mode", mode).input("seed", static_cast<std::int64_t>(cm.seed));
            rep.quantity("skew_solutions", solutions);
            rep.flag("correspondence_holds", solutions == rep.integer("incidences"));
            rep.flag("collinear_holds", static_cast<std::int64_t>(k_expected) == rep.integer("max_collinear"));
            return stamp(std::move(rep), cm, p);
          });
        }
      }
    }
  } else if (mode == "random") {
    const auto npts = ints(c, "range.points", {20});
    const auto npl = ints(c, "range.planes", {40});
    for (auto p : cm.primes) {
      for (auto np : npts) {
        for (auto nl : npl) {
          jobs.push_back([=] {
            const auto field = make_field(static_cast<std::uint64_t>(p));
            Rng rng(cm.seed ^ (static_cast<std::uint64_t>(p) << 32) ^ (static_cast<std::uint64_t>(np) << 16) ^
                    static_cast<std::uint64_t>(nl));
            const PointSet3 pts(field, random_points(static_cast<std::uint32_t>(p), static_cast<std::size_t>(np), rng));
            const PlaneSet planes(field, random_planes(static_cast<std::uint32_t>(p), static_cast<std::size_t>(nl), rng));
            Report rep = rudnev_gap(pts, planes);
            rep.input("mode", mode).input("seed", static_cast<std::int64_t>(cm.seed));
            rep.flag("oracle_holds", reference::count_incidences(pts, planes) == rep.integer("incidences"));
            return stamp(std::move(rep), cm, p);
          });
        }
      }
    }
  } else {
    throw Error(ErrorCode::BadConfig, "incidence mode must be skew or random");
  }
  return jobs;
}

std::vector<std::function<Report()>> structure_jobs(const Config& c, const Common& cm) {
  const auto as = families(c, "range.A", "interval(n=10)");
  const auto ds = ints(c, "range.d", {2, 3});
  const auto ls = ints(c, "range.l", {1, 2, 3});
  std::vector<std::function<Report()>> jobs;
  for (auto p : cm.primes) {
    for (const auto& fa : as) {
      for (auto d : ds) {
        for (auto l : ls) {
          jobs.push_back([=] {
            const auto field = make_field(static_cast<std::uint64_t>(p));
            const auto a = generate(field, fa, cm.seed);
            const std::uint32_t k = pipeline_fold(d, l);
            const auto sanders = sanders_greedy(a, k);
            const auto z = extract_z(sanders.X, d, l);
            const auto cert = verify_inclusion(z, d, l, sanders.target);
            Report rep;
            rep.kind = "structure-pipeline";
            rep.input("A", fa).input("d", d).input("l", l).input("seed", static_cast<std::int64_t>(cm.seed));
            rep.quantity("k", static_cast<std::int64_t>(k))
                .quantity("k_literal", 2 * (d * (l - 1) + 1))
                .quantity("size_a", static_cast<std::int64_t>(a.size()))
                .quantity("size_x", static_cast<std::int64_t>(sanders.X.size()))
                .quantity("size_z", static_cast<std::int64_t>(z.size()))
                .quantity("x_ratio", sanders.size_ratio)
                .quantity("z_ratio", static_cast<double>(z.size()) / static_cast<double>(a.size()))
                .quantity("doubling", doubling(a).value());
            rep.flag("sanders_verified", sanders.certificate)
                .flag("inclusion_verified", cert.verified)
                .flag("z_maximal_holds", reference::extract_z(sanders.X, d, l) == z);
            if (cert.witness) {
              rep.note("witness m=" + std::to_string(cert.witness->m) + " z=" + std::to_string(cert.witness->z));
            }
            return stamp(std::move(rep), cm, p);
          });
        }
      }
    }
  }
  return jobs;
}

std::vector<std::function<Report()>> balog_jobs(const Config& c, const Common& cm) {
  const auto as = families(c, "range.A", "interval(n=p^0.5+2)");
  const auto ks = ints(c, "range.k", {1});
  const double cc = c.get_real("c", 1.0);
  std::vector<std::function<Report()>> jobs;
  for (auto p : cm.primes) {
    for (const auto& fa : as) {
      for (auto k : ks) {
        jobs.push_back([=] {
          const auto field = make_field(static_cast<std::uint64_t>(p));
          const auto a = generate(field, fa, cm.seed);
          const auto res = balog_new_check(a, cc);
          const auto it = balog_iterated(a, static_cast<std::uint32_t>(k));
          const auto redei = redei_check(a);
          Report rep;
          rep.kind = "balog";
          rep.input("A", fa).input("k", k).input("c", cc).input("seed", static_cast<std::int64_t>(cm.seed));
          rep.quantity("size_a", static_cast<std::int64_t>(a.size()))
              .quantity("threshold", res.size_threshold)
              .quantity("iterated_threshold", it.size_threshold)
              .quantity("iterated_achieved", static_cast<std::int64_t>(it.coverage.achieved_size()))
              .quantity("quotient_size", redei.integer("quotient_size"));
          for (std::size_t i = 0; i < res.results.size(); ++i) {
            rep.quantity("expr" + std::to_string(i + 1) + "_achieved",
                         static_cast<std::int64_t>(res.results[i].achieved_size()));
            rep.flag("expr" + std::to_string(i + 1) + "_covered", res.results[i].covered);
          }
          rep.flag("above_threshold", res.above_threshold)
              .flag("iterated_covered", it.coverage.covered)
              .flag("iterated_hypothesis", it.hypothesis)
              .flag("redei_direction_holds", redei.flag_value("direction_holds"));
          return stamp(std::move(rep), cm, p);
        });
      }
    }
  }
  return jobs;
}

}  // namespace

std::vector<Report> run_experiment(const Config& config, unsigned workers) {
  const std::string kind = config.get_or("sweep", "");
  const Common cm = common(config);
  std::vector<std::function<Report()>> jobs;
  if (kind == "paley") {
    jobs = paley_jobs(config, cm);
  } else if (kind == "moment") {
    jobs = moment_jobs(config, cm);
  } else if (kind == "system") {
    jobs = system_jobs(config, cm);
  } else if (kind == "incidence") {
    jobs = incidence_jobs(config, cm);
  } else if (kind == "structure-pipeline") {
    jobs = structure_jobs(config, cm);
  } else if (kind == "balog") {
    jobs = balog_jobs(config, cm);
  } else {
    throw Error(ErrorCode::BadConfig, "unknown sweep '" + kind + "'");
  }
  auto reports = run_jobs(jobs, workers, kind);
  for (auto& r : reports) {
    if (r.timestamp.empty()) r.timestamp = cm.timestamp;
  }
  return reports;
}

}  // namespace fplab
