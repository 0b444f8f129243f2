// fplab command-line driver.
//
// Exit status: 0 when the command succeeds and every checked property holds,
// 1 when a property is violated, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fplab/balog.hpp"
#include "fplab/charsum.hpp"
#include "fplab/config.hpp"
#include "fplab/family.hpp"
#include "fplab/incidence.hpp"
#include "fplab/reference.hpp"
#include "fplab/report.hpp"
#include "fplab/set_io.hpp"
#include "fplab/spectral.hpp"
#include "fplab/structure.hpp"
#include "fplab/sweep.hpp"
#include "fplab/verify.hpp"

using namespace fplab;

namespace {

struct Operand {
  bool is_file;
  std::string text;
};

struct Common {
  std::optional<std::uint64_t> p;
  std::vector<Operand> operands;
  std::optional<std::int64_t> chr;
  std::string json_out;
  std::string csv_out;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

Common opt;

// --set and --family may be interleaved; operands bind to A, B in the order given.
void add_set_options(CLI::App* app) {
  app->add_option("--p", opt.p, "prime modulus");
  app->add_option_function<std::string>(
         "--set", [](const std::string& s) { opt.operands.push_back({true, s}); }, "set file")
      ->trigger_on_parse()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app->add_option_function<std::string>(
         "--family", [](const std::string& s) { opt.operands.push_back({false, s}); }, "family spec")
      ->trigger_on_parse()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

FieldRef field_for(std::uint64_t p) {
  static FieldRef cached;
  if (!cached || cached->p() != p) cached = make_field(p);
  return cached;
}

FpSet load(const Operand& o) {
  if (o.is_file) {
    FpSet s = read_set_file(o.text);
    if (opt.p && *opt.p != s.p()) throw Error(ErrorCode::FieldMismatch, o.text + " is not over F_" + std::to_string(*opt.p));
    return s;
  }
  if (!opt.p) throw Error(ErrorCode::BadInput, "--family needs --p");
  return generate(field_for(*opt.p), o.text, opt.seed);
}

FpSet operand(std::size_t i) {
  if (opt.operands.empty()) throw Error(ErrorCode::BadInput, "no set given (use --set or --family)");
  // B defaults to A.
  return load(opt.operands[std::min(i, opt.operands.size() - 1)]);
}

FieldRef field() {
  if (!opt.operands.empty()) return operand(0).field();
  if (!opt.p) throw Error(ErrorCode::BadInput, "--p is required");
  return field_for(*opt.p);
}

Character character(const FieldRef& f) { return opt.chr ? Character(f, *opt.chr) : legendre(f); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << text;
}

int emit(const std::vector<Report>& reports, bool batch) {
  const std::string json = batch ? to_json(reports) : to_json(reports.front());
  if (opt.json_out.empty()) {
    std::cout << json << "\n";
  } else {
    write_file(opt.json_out, json + "\n");
  }
  if (!opt.csv_out.empty()) write_file(opt.csv_out, to_csv(reports));
  for (const auto& r : reports) {
    if (!r.all_hold()) return 1;
  }
  return 0;
}

int emit(Report r) {
  if (r.timestamp.empty()) r.timestamp = utc_timestamp();
  return emit(std::vector<Report>{std::move(r)}, false);
}

Report base(const std::string& kind) {
  Report r;
  r.kind = kind;
  if (opt.p) r.input("p", static_cast<std::int64_t>(*opt.p));
  for (std::size_t i = 0; i < opt.operands.size() && i < 2; ++i) {
    r.input(i == 0 ? "A" : "B", opt.operands[i].text);
  }
  r.input("seed", static_cast<std::int64_t>(opt.seed));
  return r;
}

void note_set(Report& r, const std::string& name, const FpSet& s) { r.note(name + " = " + s.str()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character sums, sumsets and incidences over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json", opt.json_out, "write the JSON report here instead of stdout");
  app.add_option("--csv", opt.csv_out, "also write a CSV table");
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for random families");

  std::function<int()> run;

  // charsum
  PaleyOptions paley;
  auto* charsum = app.add_subcommand("charsum", "normalized character sum over A + B with bound profile");
  add_set_options(charsum);
  charsum->add_option("--char", opt.chr, "character index k (default: Legendre)");
  charsum->add_option("--delta", paley.delta);
  charsum->add_option("--c", paley.c);
  charsum->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto b = operand(1);
      Report r = paley_profile(character(a.field()), a, b, paley);
      if (opt.chr) r.input("char", *opt.chr);
      r.input("A", opt.operands[0].text).input("B", opt.operands[std::min<std::size_t>(1, opt.operands.size() - 1)].text);
      return emit(std::move(r));
    };
  });

  // moment
  std::uint32_t moment_r = 1;
  std::optional<std::uint32_t> moment_len;
  MomentOptions moment_opts;
  auto* moment = app.add_subcommand("moment", "moment sum over an interval against its explicit bound");
  add_set_options(moment);
  moment->add_option("--char", opt.chr);
  moment->add_option("--r", moment_r)->check(CLI::PositiveNumber);
  moment->add_option("--len", moment_len, "interval {0, ..., len-1} instead of --set");
  moment->add_option("--samples", moment_opts.samples);
  moment->callback([&] {
    run = [&] {
      const FpSet iv = moment_len ? FpSet::interval(field(), 0, *moment_len) : operand(0);
      moment_opts.seed = opt.seed;
      const auto m = moment_sum(character(iv.field()), iv, moment_r, moment_opts);
      Report r = base("moment");
      r.input("p", static_cast<std::int64_t>(iv.p())).input("r", static_cast<std::int64_t>(moment_r));
      r.input("interval_len", static_cast<std::int64_t>(iv.size()));
      if (opt.chr) r.input("char", *opt.chr);
      r.quantity("lhs", m.lhs).quantity("rhs", m.rhs).quantity("pairs", static_cast<std::int64_t>(m.pairs_evaluated));
      if (m.exact_lhs) r.quantity("lhs_exact", *m.exact_lhs);
      r.flag("holds", m.holds).flag("sampled", m.sampled);
      return emit(std::move(r));
    };
  });

  // energy
  auto* energy = app.add_subcommand("energy", "additive and multiplicative energy, direct and spectral");
  add_set_options(energy);
  energy->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto b = operand(1);
      const auto add = additive_energy(a, b);
      const auto mul = mult_energy(a, b);
      Report r = base("energy");
      r.input("p", static_cast<std::int64_t>(a.p()));
      r.quantity("additive", add.direct_count)
          .quantity("additive_spectral", add.spectral_value)
          .quantity("multiplicative", mul.direct_count)
          .quantity("multiplicative_spectral", mul.spectral_value);
      r.flag("additive_agreement_holds", add.agreement).flag("multiplicative_agreement_holds", mul.agreement);
      return emit(std::move(r));
    };
  });

  // system-count
  bool oracle = false;
  auto* system = app.add_subcommand("system-count", "solutions of b1/a = b1'/a', b2/a = b2'/a'");
  add_set_options(system);
  system->add_flag("--oracle", oracle, "also run the brute-force count");
  system->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto b = operand(1);
      Report r = base("system");
      r.input("p", static_cast<std::int64_t>(a.p()));
      const auto sigma = count_system(a, b);
      r.quantity("sigma", sigma);
      if (oracle) r.flag("oracle_holds", reference::count_system(a, b) == sigma);
      return emit(std::move(r));
    };
  });

  // dilate-eq
  std::optional<std::uint32_t> xi;
  auto* dil = app.add_subcommand("dilate-eq", "solutions of xi (a1 - a2) = a3 + a4 - a5 - a6");
  add_set_options(dil);
  dil->add_option("--xi", xi, "single xi (default: every xi)");
  dil->callback([&] {
    run = [&] {
      const auto a = operand(0);
      Report r = base("dilate-eq");
      r.input("p", static_cast<std::int64_t>(a.p()));
      const double lower = std::pow(static_cast<double>(a.size()), 6) / a.p();
      r.quantity("lower_bound", lower);
      bool ok = true;
      auto record = [&](std::uint32_t x, const DilateEqCount& c) {
        r.quantity("count_" + std::to_string(x), c.count);
        ok = ok && c.count >= lower;
      };
      if (xi) {
        record(*xi % a.p(), count_dilate_eq(a, *xi % a.p()));
      } else {
        const auto all = count_dilate_eq_all(a);
        for (std::uint32_t x = 0; x < a.p(); ++x) record(x, all[x]);
      }
      r.flag("lower_bound_holds", ok);
      return emit(std::move(r));
    };
  });

  // incidence
  std::string conf_file;
  bool skew = false;
  auto* inc = app.add_subcommand("incidence", "point-plane incidences against the Rudnev bound");
  add_set_options(inc);
  inc->add_option("--config", conf_file, "point/plane file");
  inc->add_flag("--skew", skew, "use the point/plane families built from --set/--family A, B");
  inc->add_flag("--oracle", oracle, "also count by brute force");
  inc->callback([&] {
    run = [&] {
      std::optional<Configuration3> conf;
      Report extra;
      if (!conf_file.empty()) {
        conf = read_configuration_file(conf_file);
      } else if (skew) {
        const auto a = operand(0);
        const auto b = operand(1).without(0);
        auto s = skew_configuration(a, b);
        conf = Configuration3{std::move(s.points), std::move(s.planes)};
        extra.quantity("skew_solutions", count_skew_products(a, b));
      } else {
        throw Error(ErrorCode::BadInput, "incidence needs --config or --skew");
      }
      Report r = rudnev_gap(conf->points, conf->planes);
      for (const auto& [k, v] : base("incidence").inputs) r.inputs[k] = v;
      r.input("p", static_cast<std::int64_t>(conf->points.p()));
      for (const auto& [k, v] : extra.quantities) r.quantity(k, v);
      if (skew) r.flag("correspondence_holds", r.integer("skew_solutions") == r.integer("incidences"));
      if (oracle) r.flag("oracle_holds", reference::count_incidences(conf->points, conf->planes) == r.integer("incidences"));
      return emit(std::move(r));
    };
  });

  // structure
  std::int64_t d = 2;
  std::int64_t l = 1;
  std::uint32_t k = 2;
  std::string set_out;
  auto* structure = app.add_subcommand("structure", "BSG, Sanders-set and inclusion extraction");
  structure->require_subcommand(1);
  structure->fallthrough();
  auto* ez = structure->add_subcommand("extract-z", "maximal Z with d^j Z in X - X, j < l");
  add_set_options(ez);
  ez->add_option("--d", d);
  ez->add_option("--l", l);
  ez->add_option("--out", set_out, "write Z as a set file");
  ez->callback([&] {
    run = [&] {
      // X is the first operand; a second operand A adds the check against 2A - 2A.
      const auto x = operand(0);
      const auto z = extract_z(x, d, l);
      Report r = base("extract-z");
      r.input("p", static_cast<std::int64_t>(x.p())).input("d", d).input("l", l);
      r.quantity("size_x", static_cast<std::int64_t>(x.size())).quantity("size_z", static_cast<std::int64_t>(z.size()));
      note_set(r, "Z", z);
      if (opt.operands.size() > 1) {
        const auto cert = verify_inclusion(z, d, l, sum_minus(operand(1), 2, 2));
        r.flag("inclusion_verified", cert.verified);
        if (cert.witness) r.note("witness m=" + std::to_string(cert.witness->m) + " z=" + std::to_string(cert.witness->z));
      }
      if (!set_out.empty()) write_set_file(set_out, z);
      return emit(std::move(r));
    };
  });
  auto* sanders = structure->add_subcommand("sanders", "greedy X in A - A with kX in 2A - 2A");
  add_set_options(sanders);
  sanders->add_option("--k", k)->check(CLI::PositiveNumber);
  sanders->add_option("--out", set_out, "write X as a set file");
  sanders->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto s = sanders_greedy(a, k);
      Report r = base("sanders");
      r.input("p", static_cast<std::int64_t>(a.p())).input("k", static_cast<std::int64_t>(k));
      r.quantity("size_a", static_cast<std::int64_t>(a.size()))
          .quantity("size_x", static_cast<std::int64_t>(s.X.size()))
          .quantity("size_ratio", s.size_ratio)
          .quantity("candidates", static_cast<std::int64_t>(s.candidates));
      r.flag("certificate_verified", s.certificate);
      note_set(r, "X", s.X);
      if (!set_out.empty()) write_set_file(set_out, s.X);
      return emit(std::move(r));
    };
  });
  auto* bsg = structure->add_subcommand("bsg", "popular-sum graph component");
  add_set_options(bsg);
  bsg->add_option("--out", set_out, "write the component as a set file");
  bsg->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto res = bsg_extract(a);
      Report r = base("bsg");
      r.input("p", static_cast<std::int64_t>(a.p()));
      r.quantity("K_in", res.K_in.value())
          .quantity("energy", res.energy)
          .quantity("size_ratio", res.size_ratio)
          .quantity("doubling_out", res.doubling_out)
          .quantity("popular_sums", static_cast<std::int64_t>(res.popular_sums));
      note_set(r, "subset", res.subset);
      if (!set_out.empty()) write_set_file(set_out, res.subset);
      return emit(std::move(r));
    };
  });

  // balog
  double balog_c = 1.0;
  std::uint32_t balog_k = 1;
  auto* balog = app.add_subcommand("balog", "coverage of F_p by rational expressions in A");
  balog->require_subcommand(1);
  balog->fallthrough();
  auto* check = balog->add_subcommand("check", "the three coverage expressions");
  add_set_options(check);
  check->add_option("--c", balog_c);
  check->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto res = balog_new_check(a, balog_c);
      Report r = base("balog-check");
      r.input("p", static_cast<std::int64_t>(a.p())).input("c", balog_c);
      r.quantity("threshold", res.size_threshold).quantity("size_a", static_cast<std::int64_t>(a.size()));
      for (std::size_t i = 0; i < res.results.size(); ++i) {
        const std::string n = "expr" + std::to_string(i + 1);
        r.quantity(n + "_achieved", static_cast<std::int64_t>(res.results[i].achieved_size()));
        r.flag(n + "_covered", res.results[i].covered);
        r.note(n + " = " + res.results[i].expression);
      }
      r.flag("above_threshold", res.above_threshold);
      return emit(std::move(r));
    };
  });
  auto* redei = balog->add_subcommand("redei", "quotient set size against the direction bound");
  add_set_options(redei);
  redei->callback([&] {
    run = [&] {
      Report r = redei_check(operand(0));
      for (const auto& [key, v] : base("redei").inputs) r.inputs[key] = v;
      return emit(std::move(r));
    };
  });
  auto* iterated = balog->add_subcommand("iterated", "(A - A)^{2k+1} coverage");
  add_set_options(iterated);
  iterated->add_option("--k", balog_k)->check(CLI::PositiveNumber);
  iterated->callback([&] {
    run = [&] {
      const auto a = operand(0);
      const auto it = balog_iterated(a, balog_k);
      Report r = base("balog-iterated");
      r.input("p", static_cast<std::int64_t>(a.p())).input("k", static_cast<std::int64_t>(balog_k));
      r.quantity("achieved", static_cast<std::int64_t>(it.coverage.achieved_size()))
          .quantity("threshold", it.size_threshold);
      r.flag("covered", it.coverage.covered).flag("hypothesis", it.hypothesis);
      note_set(r, "achieved", it.coverage.achieved);
      return emit(std::move(r));
    };
  });
  auto* qr = balog->add_subcommand("qr-decomp", "sums inside the quadratic residues");
  add_set_options(qr);
  qr->callback([&] {
    run = [&] {
      Report r = qr_decomposition_check(operand(0), operand(1));
      for (const auto& [key, v] : base("qr-decomp").inputs) r.inputs[key] = v;
      return emit(std::move(r));
    };
  });

  // generate
  auto* gen = app.add_subcommand("generate", "materialize a family as a set file");
  add_set_options(gen);
  gen->add_option("--out", set_out, "set file (default: stdout)");
  gen->callback([&] {
    run = [&] {
      const auto s = operand(0);
      if (set_out.empty()) {
        write_set(std::cout, s);
      } else {
        write_set_file(set_out, s);
      }
      if (!opt.json_out.empty()) {
        Report r = base("generate");
        r.quantity("size", static_cast<std::int64_t>(s.size()));
        if (s.size() > 0) r.quantity("doubling", doubling(s).value());
        r.timestamp = utc_timestamp();
        write_file(opt.json_out, to_json(r) + "\n");
      }
      return 0;
    };
  });

  // sweep
  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "run the experiment described by a config file");
  sweep->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
  sweep->callback([&] {
    run = [&] {
      const auto reports = run_experiment(Config::load(config_path), opt.jobs);
      return emit(reports, true);
    };
  });

  // verify
  bool minimal = false;
  auto* verify = app.add_subcommand("verify", "run every property check");
  verify->add_flag("--minimal", minimal, "p = 7 only");
  verify->callback([&] {
    run = [&] {
      VerifyOptions vo;
      vo.minimal = minimal;
      vo.seed = opt.seed;
      return emit(verify_suite(vo));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
