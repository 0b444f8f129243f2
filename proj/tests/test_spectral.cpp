#include <gtest/gtest.h>

#include "fplab/family.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"
#include "helpers.hpp"

using namespace fplab;
using testing_helpers::as_set;

namespace {

DenseFunction random_function(const FieldRef& f, Rng& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::complex<double>> v(f->p());
  for (auto& x : v) x = {u(rng), u(rng)};
  return DenseFunction(f, v);
}

}  // namespace

TEST(Dft, Examples) {
  auto f5 = make_field(5);
  const auto d0 = dft(DenseFunction::delta(f5, 0));
  for (std::uint32_t x = 0; x < 5; ++x) EXPECT_LT(std::abs(d0[x] - 1.0), 1e-12);
  const auto full = dft(DenseFunction::indicator(FpSet::full(f5)));
  EXPECT_LT(std::abs(full[0] - 5.0), 1e-12);
  for (std::uint32_t x = 1; x < 5; ++x) EXPECT_LT(std::abs(full[x]), 1e-12);
  const auto two = dft(DenseFunction::indicator(FpSet::of(f5, {0, 1})));
  EXPECT_NEAR(std::norm(two[1]), 2 + 2 * std::cos(2 * M_PI / 5), 1e-12);
  EXPECT_NEAR(std::norm(two[1]), 2.618034, 1e-6);
}

TEST(Dft, SignConventionAndIndicatorPath) {
  auto f = make_field(13);
  const auto d = dft(DenseFunction::delta(f, 1));
  EXPECT_LT(std::abs(d[1] - std::polar(1.0, -2 * M_PI / 13)), 1e-12);
  Rng rng(2);
  const auto a = random_subset(f, 6, rng);
  const auto x = dft(DenseFunction::indicator(a));
  const auto y = dft_indicator(a);
  const auto z = reference::dft(DenseFunction::indicator(a));
  for (std::uint32_t i = 0; i < 13; ++i) {
    EXPECT_LT(std::abs(x[i] - y[i]), 1e-9);
    EXPECT_LT(std::abs(x[i] - z[i]), 1e-9);
  }
}

TEST(Convolve, Examples) {
  auto f5 = make_field(5);
  const auto a = DenseFunction::indicator(FpSet::of(f5, {0, 1}));
  const auto c = convolve(a, a);
  const double want[] = {1, 2, 1, 0, 0};
  for (std::uint32_t x = 0; x < 5; ++x) EXPECT_NEAR(c[x].real(), want[x], 1e-12);
  auto f7 = make_field(7);
  const auto full = DenseFunction::indicator(FpSet::full(f7));
  const auto cc = convolve(full, full);
  for (std::uint32_t x = 0; x < 7; ++x) EXPECT_NEAR(cc[x].real(), 7.0, 1e-12);
  Rng rng(4);
  const auto g = random_function(f7, rng);
  const auto gd = convolve(g, DenseFunction::delta(f7, 0));
  for (std::uint32_t x = 0; x < 7; ++x) EXPECT_LT(std::abs(gd[x] - g[x]), 1e-12);
}

TEST(Fourier, PlancherelAndConvolutionTheorem) {
  Rng rng(9);
  for (std::uint32_t p : {7u, 31u, 101u}) {
    auto f = make_field(p);
    for (int i = 0; i < 20; ++i) {
      const auto u = random_function(f, rng);
      const auto v = random_function(f, rng);
      const auto U = dft(u);
      const auto V = dft(v);
      std::complex<double> lhs = 0, rhs = 0;
      double mu = 0, mv = 0;
      for (std::uint32_t x = 0; x < p; ++x) {
        lhs += u[x] * std::conj(v[x]);
        rhs += U[x] * std::conj(V[x]);
        mu = std::max(mu, std::abs(u[x]));
        mv = std::max(mv, std::abs(v[x]));
      }
      EXPECT_LT(std::abs(lhs - rhs / static_cast<double>(p)), 1e-9 * p * mu * mv);
      const auto C = dft(convolve(u, v));
      const auto R = reference::convolve(u, v);
      const auto c = convolve(u, v);
      for (std::uint32_t x = 0; x < p; ++x) {
        EXPECT_LT(std::abs(C[x] - U[x] * V[x]), 1e-9 * p * p * mu * mv);
        EXPECT_LT(std::abs(R[x] - c[x]), 1e-9 * p);
      }
    }
  }
}

TEST(Energy, Examples) {
  auto f5 = make_field(5);
  EXPECT_EQ(additive_energy(FpSet::of(f5, {0, 1}), FpSet::of(f5, {0, 1})).direct_count, 6);
  EXPECT_EQ(additive_energy(FpSet::full(f5), FpSet::full(f5)).direct_count, 125);
  EXPECT_EQ(additive_energy(FpSet::of(f5, {3}), FpSet::of(f5, {3})).direct_count, 1);
  auto f7 = make_field(7);
  const auto h = FpSet::of(f7, {1, 2, 4});
  EXPECT_EQ(mult_energy(h, h).direct_count, 27);
  EXPECT_EQ(mult_energy(FpSet::of(f7, {1, 2}), FpSet::of(f7, {1, 2})).direct_count, 6);
  EXPECT_EQ(mult_energy(FpSet::of(f7, {5}), FpSet::of(f7, {5})).direct_count, 1);
  // zeros are counted: 0*b = 0*b' for every pair
  EXPECT_EQ(mult_energy(FpSet::of(f7, {0, 1}), FpSet::of(f7, {1})).direct_count,
            oracle::mult_energy({0, 1}, {1}, 7));
}

TEST(Energy, DirectSpectralAndOracle) {
  Rng rng(31);
  for (std::uint32_t p : {7u, 101u, 499u}) {
    auto f = make_field(p);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_subset(f, rng() % std::min<std::uint32_t>(25, p + 1), rng);
      const auto b = random_subset(f, rng() % std::min<std::uint32_t>(25, p + 1), rng);
      const auto e = additive_energy(a, b);
      const auto m = mult_energy(a, b);
      EXPECT_TRUE(e.agreement);
      EXPECT_TRUE(m.agreement);
      EXPECT_LT(std::abs(e.direct_count - e.spectral_value), kRoundingTolerance);
      EXPECT_EQ(e.direct_count, oracle::additive_energy(as_set(a), as_set(b), p));
      EXPECT_EQ(m.direct_count, oracle::mult_energy(as_set(a), as_set(b), p));
      if (!a.empty() && !b.empty()) {
        const double na = a.size(), nb = b.size();
        EXPECT_GE(static_cast<double>(e.direct_count) * sumset(a, b).size(), na * na * nb * nb);
      }
    }
  }
}

TEST(CountSystem, ExamplesAndOracle) {
  auto f7 = make_field(7);
  EXPECT_EQ(count_system(FpSet::of(f7, {1, 2}), FpSet::of(f7, {1})), 2);
  EXPECT_EQ(count_system(FpSet::of(f7, {1}), FpSet::of(f7, {1, 2, 3})), 9);
  auto f5 = make_field(5);
  EXPECT_EQ(count_system(FpSet::of(f5, {1, 2}), FpSet::of(f5, {1, 2})), 10);
  EXPECT_EQ(oracle::system({1, 2}, {1, 2}, 5), 10);
  try {
    count_system(FpSet::of(f5, {0, 1}), FpSet::of(f5, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInA);
  }
  Rng rng(8);
  for (std::uint32_t p : {11u, 53u, 101u}) {
    auto f = make_field(p);
    for (int i = 0; i < 5; ++i) {
      const auto a = random_subset(f, 1 + rng() % 8, rng).without(0);
      const auto b = random_subset(f, rng() % 8, rng);
      if (a.empty()) continue;
      EXPECT_EQ(count_system(a, b), oracle::system(as_set(a), as_set(b), p));
    }
  }
}

TEST(DilateEq, ExamplesSpectralAndBound) {
  auto f5 = make_field(5);
  const auto a = FpSet::of(f5, {0, 1});
  EXPECT_EQ(count_dilate_eq(a, 1).count, 20);
  EXPECT_EQ(count_dilate_eq(a, 0).count, 24);
  EXPECT_EQ(oracle::dilate_eq({0, 1}, 1, 5), 20);
  EXPECT_EQ(oracle::dilate_eq({0, 1}, 0, 5), 24);
  EXPECT_EQ(count_dilate_eq(FpSet::of(f5, {3}), 2).count, 1);
  Rng rng(12);
  for (std::uint32_t p : {7u, 11u, 13u}) {
    auto f = make_field(p);
    for (int i = 0; i < 4; ++i) {
      const auto s = random_subset(f, 1 + rng() % 5, rng);
      const auto all = count_dilate_eq_all(s);
      for (std::uint32_t xi = 0; xi < p; ++xi) {
        EXPECT_EQ(all[xi].count, oracle::dilate_eq(as_set(s), xi, p));
        EXPECT_LT(std::abs(all[xi].count - all[xi].spectral_value), kRoundingTolerance);
        EXPECT_GE(all[xi].count, std::pow(static_cast<double>(s.size()), 6) / p);
      }
    }
  }
}

TEST(SkewProducts, MatchOracle) {
  Rng rng(6);
  auto f = make_field(13);
  for (int i = 0; i < 5; ++i) {
    const auto a = random_subset(f, 1 + rng() % 3, rng);
    const auto b = random_subset(f, 1 + rng() % 3, rng);
    EXPECT_EQ(count_skew_products(a, b), oracle::skew(as_set(a), as_set(b), 13));
  }
}
