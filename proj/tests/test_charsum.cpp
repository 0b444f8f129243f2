#include <gtest/gtest.h>

#include "fplab/charsum.hpp"
#include "fplab/family.hpp"
#include "fplab/reference.hpp"
#include "oracle.hpp"

using namespace fplab;

namespace {

std::complex<double> brute_sum(std::int64_t k, const FpSet& a, const FpSet& b) {
  std::complex<double> s = 0;
  for (auto x : a.elements())
    for (auto y : b.elements()) s += oracle::chi(k, x + y, a.p());
  return s;
}

double brute_moment(std::int64_t k, std::uint32_t p, std::uint32_t len, std::uint32_t r) {
  double total = 0;
  for (std::uint32_t u1 = 0; u1 < p; ++u1)
    for (std::uint32_t u2 = 0; u2 < p; ++u2) {
      std::complex<double> s = 0;
      for (std::uint32_t t = 0; t < len; ++t) s += oracle::chi(k, u1 + t, p) * std::conj(oracle::chi(k, u2 + t, p));
      total += std::pow(std::norm(s), r);
    }
  return total;
}

}  // namespace

TEST(CharacterSum, Examples) {
  auto f = make_field(7);
  const auto leg = legendre(f);
  const auto r1 = character_sum(leg, FpSet::of(f, {1, 2}), FpSet::of(f, {3}));
  EXPECT_EQ(r1.exact, 0);
  const auto star = FpSet::full(f).without(0);
  EXPECT_EQ(character_sum(leg, star, star).exact, 0);
  EXPECT_EQ(character_sum(leg, FpSet::of(f, {0}), FpSet::of(f, {0})).exact, 0);
  EXPECT_DOUBLE_EQ(character_sum(leg, FpSet::of(f, {1}), FpSet::of(f, {1})).normalized, 1.0);
  try {
    character_sum(leg, FpSet(f), star);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
}

TEST(CharacterSum, OraclesAndInvariants) {
  Rng rng(14);
  for (std::uint32_t p : {7u, 13u, 31u}) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; ++k) {
      const Character chi(f, k);
      const auto a = random_subset(f, 1 + rng() % p, rng);
      const auto b = random_subset(f, 1 + rng() % p, rng);
      const auto s = character_sum(chi, a, b);
      const double scale = 1e-9 * a.size() * b.size();
      EXPECT_LT(std::abs(s.value - brute_sum(k, a, b)), scale);
      EXPECT_LT(std::abs(s.value - reference::character_sum(chi, a, b)), scale);
      EXPECT_GE(s.normalized, 0.0);
      EXPECT_LE(s.normalized, 1.0);
      EXPECT_LT(std::abs(character_sum(chi.conjugate(), a, b).value - std::conj(s.value)), scale);
      const std::int64_t t = static_cast<std::int64_t>(rng() % p);
      EXPECT_LT(std::abs(character_sum(chi, a.translate(-t), b.translate(t)).value - s.value), scale);
      EXPECT_LT(character_sum(chi, FpSet::full(f), FpSet::of(f, {0})).magnitude, 1e-9 * p);
      if (chi.is_quadratic()) {
        ASSERT_TRUE(s.exact.has_value());
        std::int64_t e = 0;
        for (auto x : a.elements())
          for (auto y : b.elements()) e += oracle::legendre(x + y, p);
        EXPECT_EQ(*s.exact, e);
      }
    }
  }
}

TEST(CharacterSum, LegendrePairIdentity) {
  for (std::uint32_t p : {7u, 11u, 23u}) {
    auto f = make_field(p);
    const auto leg = legendre(f);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        if (a == b) continue;
        std::int64_t s = 0, o = 0;
        for (std::uint32_t u = 0; u < p; ++u) {
          s += leg.sign((u + a) % p) * leg.sign((u + b) % p);
          o += oracle::legendre(u + a, p) * oracle::legendre(u + b, p);
        }
        EXPECT_EQ(s, -1);
        EXPECT_EQ(o, -1);
      }
  }
}

TEST(Moment, Examples) {
  auto f7 = make_field(7);
  const auto m = moment_sum(legendre(f7), FpSet::interval(f7, 0, 2), 1);
  EXPECT_EQ(m.exact_lhs, 74);
  EXPECT_DOUBLE_EQ(m.lhs, 74.0);
  EXPECT_DOUBLE_EQ(m.rhs, 210.0);
  EXPECT_TRUE(m.holds);
  EXPECT_NEAR(brute_moment(3, 7, 2, 1), 74.0, 1e-9);
  const auto m1 = moment_sum(legendre(f7), FpSet::interval(f7, 0, 1), 1);
  EXPECT_DOUBLE_EQ(m1.lhs, 36.0);
  EXPECT_DOUBLE_EQ(m1.rhs, 77.0);
  auto f11 = make_field(11);
  for (std::uint32_t k = 1; k < 10; ++k) {
    const auto r = moment_sum(Character(f11, k), FpSet::interval(f11, 0, 3), 2);
    EXPECT_DOUBLE_EQ(r.rhs, 121.0 * 9 * 16 + 16.0 * 11 * 81);
    EXPECT_NEAR(r.lhs, brute_moment(k, 11, 3, 2), 1e-6 * r.lhs);
    EXPECT_TRUE(r.holds);
  }
  try {
    moment_sum(legendre(f7), FpSet::of(f7, {0, 2}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInterval);
  }
}

TEST(Moment, SampledAboveLimitIsFlagged) {
  auto f = make_field(31);
  MomentOptions o;
  o.exhaustive_limit = 7;
  o.samples = 2000;
  const auto m = moment_sum(legendre(f), FpSet::interval(f, 0, 3), 1, o);
  EXPECT_TRUE(m.sampled);
  EXPECT_EQ(m.pairs_evaluated, 2000u);
  EXPECT_FALSE(m.exact_lhs.has_value());
}

TEST(Bounds, FormulaArithmetic) {
  BoundParams lp;
  lp.p = 7;
  lp.interval_size = 2;
  lp.r = 1;
  EXPECT_DOUBLE_EQ(bound_eval(BoundName::Lemma1, lp), 210.0);
  BoundParams cg;
  cg.K = 2;
  cg.size_a = 10;
  cg.size_b = 100;
  EXPECT_NEAR(bound_eval(BoundName::Cor1General, cg), std::pow(2.0, 1.5) * 10 * 1e5, 1e-6);
  EXPECT_NEAR(bound_eval(BoundName::Cor1General, cg), 2.8284e6, 1e2);
  BoundParams t2;
  t2.p = std::pow(2.0, 20);
  t2.K = 2;
  t2.delta = 1;
  t2.c = 1;
  EXPECT_NEAR(bound_eval(BoundName::Thm2, t2), std::exp(-std::cbrt(20.0)), 1e-12);
  EXPECT_NEAR(bound_eval(BoundName::Thm2, t2), 0.06633, 1e-4);
  BoundParams sd;
  sd.p = 1024;
  sd.K = 2;
  sd.L = 4;
  sd.size_a = 10;
  sd.size_b = 20;
  EXPECT_NEAR(bound_eval(BoundName::Cor1SmallDoubling, sd),
              std::pow(2.0, 1.25) * std::pow(4.0, 2.5) * 10 * 400 * 10 + 100 * 20, 1e-6);
  BoundParams t1;
  t1.p = 101;
  t1.delta = 0.5;
  t1.CK = 2;
  EXPECT_NEAR(bound_eval(BoundName::Thm1Param, t1), std::pow(101.0, -0.125), 1e-12);
  try {
    bound_eval(BoundName::Thm1Param, lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingParam);
  }
  EXPECT_EQ(parse_bound_name("cor1_general"), BoundName::Cor1General);
}

TEST(Bounds, ExponentConventionsCoincide) {
  // exp(-c delta l) with l = (delta log p / log^2 K)^{1/3} is the delta^4 form.
  for (double delta : {0.1, 0.5, 1.0}) {
    BoundParams b;
    b.p = 1 << 20;
    b.K = 3;
    b.delta = delta;
    const double l = thm2_level(1 << 20, 3, delta);
    EXPECT_NEAR(l, std::cbrt(delta * 20 / std::pow(std::log2(3.0), 2)), 1e-12);
    EXPECT_NEAR(std::log(bound_eval(BoundName::Thm2, b)), -delta * l, 1e-9);
  }
}

TEST(Paley, ProfileOfFullMultiplicativeGroup) {
  auto f = make_field(7);
  const auto star = FpSet::full(f).without(0);
  const auto r = paley_profile(legendre(f), star, star);
  EXPECT_EQ(r.kind, "paley");
  EXPECT_DOUBLE_EQ(r.number("normalized"), 0.0);
  EXPECT_EQ(r.integer("sum_exact"), 0);
}
