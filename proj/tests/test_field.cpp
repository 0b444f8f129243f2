#include <gtest/gtest.h>

#include <numeric>

#include "fplab/field.hpp"
#include "oracle.hpp"

using namespace fplab;

TEST(Field, LeastPrimitiveRoots) {
  EXPECT_EQ(make_field(7)->generator(), 3u);
  EXPECT_EQ(make_field(11)->generator(), 2u);
  for (std::uint32_t p : {3u, 5u, 13u, 31u, 97u, 101u, 499u}) {
    std::int64_t g = 2;
    while (oracle::order(g, p) != p - 1) ++g;
    EXPECT_EQ(make_field(p)->generator(), static_cast<std::uint32_t>(g)) << p;
  }
}

TEST(Field, RejectsBadModuli) {
  for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 4ULL, 9ULL, 91ULL, 561ULL}) {
    try {
      make_field(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPrime) << n;
    }
  }
  try {
    make_field(1000003, 1 << 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Field, PrimalityAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(4294967311ULL));
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST(Field, DlogTableIsBijectiveAndInvertsPowers) {
  for (std::uint32_t p : {3u, 7u, 101u, 499u}) {
    auto f = make_field(p);
    std::vector<bool> seen(p - 1, false);
    for (std::uint32_t x = 1; x < p; ++x) {
      const auto t = f->dlog(x);
      ASSERT_LT(t, p - 1);
      EXPECT_FALSE(seen[t]);
      seen[t] = true;
      EXPECT_EQ(oracle::power(f->generator(), t, p), x);
      EXPECT_EQ(f->exp(t), x);
      EXPECT_EQ(mul_mod(x, f->inverse(x), p), 1u);
    }
  }
}

TEST(Field, ModularHelpers) {
  EXPECT_EQ(reduce(-1, 7), 6u);
  EXPECT_EQ(reduce(-15, 7), 6u);
  EXPECT_EQ(centered(6, 7), -1);
  EXPECT_EQ(centered(3, 7), 3);
  EXPECT_EQ(centered(4, 7), -3);
  EXPECT_EQ(pow_mod(3, 6, 7), 1u);
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(Character, ConstructionAndOrder) {
  auto f7 = make_field(7);
  EXPECT_TRUE(Character(f7, 3).is_quadratic());
  EXPECT_EQ(Character(f7, 3).order(), 2u);
  EXPECT_EQ(Character(f7, 2).order(), 3u);
  EXPECT_EQ(Character(make_field(11), 5).order(), 2u);
  for (std::int64_t k : {0, 6, -6, 12}) {
    try {
      Character(f7, k);
      FAIL() << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::TrivialCharacter);
    }
  }
}

TEST(Character, LegendreValuesMod7) {
  auto f = make_field(7);
  const Character leg = legendre(f);
  EXPECT_EQ(char_eval(leg, 2).index(), 0u);
  EXPECT_EQ(char_eval(leg, 5).index(), 3u);
  EXPECT_EQ(leg.sign(5), -1);
  EXPECT_TRUE(char_eval(leg, 0).is_zero());
  for (std::uint32_t x = 0; x < 7; ++x) EXPECT_EQ(leg.sign(x), oracle::legendre(x, 7)) << x;
}

TEST(Character, ValuesMatchDefinition) {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; ++k) {
      const Character chi(f, k);
      for (std::uint32_t x = 0; x < p; ++x) {
        EXPECT_LT(std::abs(chi.value(x) - oracle::chi(k, x, p)), 1e-12);
      }
    }
  }
}

TEST(Character, MultiplicativityExhaustive) {
  for (std::uint32_t p : {7u, 31u, 101u}) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; k += (p > 31 ? 7 : 1)) {
      const Character chi(f, k);
      for (std::uint32_t x = 1; x < p; ++x)
        for (std::uint32_t y = 1; y < p; ++y)
          ASSERT_EQ(chi.eval(mul_mod(x, y, p)), chi.eval(x) * chi.eval(y)) << p << " " << k;
    }
  }
}

TEST(Character, OrthogonalityAndConjugate) {
  for (std::uint32_t p : {7u, 13u, 101u}) {
    auto f = make_field(p);
    for (std::uint32_t k = 1; k + 1 < p; ++k) {
      const Character chi(f, k);
      std::complex<double> s = 0;
      for (std::uint32_t x = 0; x < p; ++x) s += chi.value(x);
      EXPECT_LT(std::abs(s), 1e-9 * p);
      const Character bar = chi.conjugate();
      for (std::uint32_t x = 1; x < p; ++x) {
        EXPECT_EQ((chi.eval(x) * bar.eval(x)).index(), 0u);
        EXPECT_LT(std::abs(bar.value(x) - std::conj(chi.value(x))), 1e-12);
      }
    }
  }
}

TEST(UnitValue, ArithmeticAndModulus) {
  const auto a = UnitValue::root(6, 4);
  const auto b = UnitValue::root(6, 5);
  EXPECT_EQ((a * b).index(), 3u);
  EXPECT_TRUE((a * UnitValue::zero(6)).is_zero());
  EXPECT_DOUBLE_EQ(std::abs(a.to_complex()), 1.0);
  EXPECT_EQ(UnitValue::root(4, 1).to_complex(), std::complex<double>(0, 1));
}

TEST(Field, CorruptedTablesAreDetectableByRoundTrip) {
  auto good = make_field(11);
  std::vector<std::uint32_t> table(good->dlog_table().begin(), good->dlog_table().end());
  std::swap(table[2], table[3]);
  auto bad = PrimeField::from_tables(11, good->generator(), table);
  bool all_ok = true;
  for (std::uint32_t x = 1; x < 11; ++x) all_ok = all_ok && pow_mod(bad->generator(), bad->dlog(x), 11) == x;
  EXPECT_FALSE(all_ok);
}
