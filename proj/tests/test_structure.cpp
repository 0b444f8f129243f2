#include <gtest/gtest.h>

#include "fplab/family.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"
#include "fplab/structure.hpp"
#include "helpers.hpp"

using namespace fplab;
using testing_helpers::as_set;

TEST(Bsg, Examples) {
  auto f = make_field(101);
  const auto a = FpSet::interval(f, 0, 10);
  const auto r = bsg_extract(a);
  EXPECT_EQ(r.subset, a);
  EXPECT_EQ(bsg_extract(FpSet::of(f, {5})).subset, FpSet::of(f, {5}));
  EXPECT_EQ(bsg_extract(FpSet::of(f, {5})).K_in, Rational::of(1, 1));
  auto f7 = make_field(7);
  const auto b = FpSet::of(f7, {0, 1, 3});
  const auto rb = bsg_extract(b);
  EXPECT_EQ(rb.energy, 15);
  EXPECT_EQ(rb.K_in, Rational::of(9, 5));
  EXPECT_EQ(rb.subset, b);
  EXPECT_EQ(bsg_extract(FpSet::full(f7)).subset, FpSet::full(f7));
  EXPECT_THROW(bsg_extract(FpSet(f7)), Error);
}

TEST(Bsg, StructuralProperties) {
  Rng rng(2);
  auto f = make_field(101);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_subset(f, 1 + rng() % 25, rng);
    const auto r = bsg_extract(a);
    EXPECT_FALSE(r.subset.empty());
    EXPECT_TRUE(r.subset.is_subset_of(a));
    EXPECT_EQ(bsg_extract(a).subset, r.subset);
    EXPECT_EQ(r.energy, oracle::additive_energy(as_set(a), as_set(a), 101));
  }
  // a coset of a multiplicative subgroup times an interval of F_p: K = 1 only for F_p
  auto f13 = make_field(13);
  EXPECT_EQ(bsg_extract(FpSet::full(f13)).subset.size(), 13u);
}

TEST(Sanders, Examples) {
  auto f = make_field(101);
  const auto r = sanders_greedy(FpSet::interval(f, 0, 10), 2);
  EXPECT_EQ(as_set(r.X), oracle::centered(-9, 9, 101));
  EXPECT_TRUE(r.certificate);
  EXPECT_EQ(fold_sum(r.X, 2), sum_minus(FpSet::interval(f, 0, 10), 2, 2));
  EXPECT_EQ(sanders_greedy(FpSet::of(f, {7}), 4).X, FpSet::of(f, {0}));
  const auto t = sanders_greedy(FpSet::of(f, {0, 1, 3}), 3);
  EXPECT_EQ(as_set(t.X), oracle::centered(-2, 2, 101));
  EXPECT_THROW(sanders_greedy(FpSet(f), 2), Error);
}

TEST(Sanders, CandidateOrder) {
  auto f = make_field(11);
  EXPECT_EQ(centered_order(FpSet::full(f)), (std::vector<std::uint32_t>{0, 1, 10, 2, 9, 3, 8, 4, 7, 5, 6}));
}

TEST(Sanders, CertificateOnRandomSets) {
  Rng rng(4);
  auto f = make_field(199);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_subset(f, 2 + rng() % 10, rng);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 6);
    const auto r = sanders_greedy(a, k);
    EXPECT_TRUE(r.certificate);
    EXPECT_TRUE(r.X.is_subset_of(difference_set(a, a)));
    EXPECT_TRUE(fold_sum(r.X, k).is_subset_of(sum_minus(a, 2, 2)));
    // greedy maximality: no skipped candidate fits
    for (auto x : difference_set(a, a).elements()) {
      if (r.X.contains(x)) continue;
      EXPECT_FALSE(fold_sum(r.X.with(x), k).is_subset_of(sum_minus(a, 2, 2))) << x;
    }
  }
}

TEST(ExtractZ, ExamplesAndErrors) {
  auto f = make_field(101);
  const auto x = FpSet::interval(f, 0, 10);
  EXPECT_EQ(as_set(extract_z(x, 2, 2)), oracle::centered(-4, 4, 101));
  EXPECT_EQ(extract_z(x, 3, 1), difference_set(x, x));
  auto f7 = make_field(7);
  EXPECT_EQ(extract_z(FpSet::of(f7, {0, 1}), 2, 2), FpSet::of(f7, {0}));
  EXPECT_THROW(extract_z(x, 1, 2), Error);
  EXPECT_THROW(extract_z(x, 2, 0), Error);
}

TEST(ExtractZ, MaximalAndMonotone) {
  Rng rng(6);
  for (std::uint32_t p : {31u, 101u}) {
    auto f = make_field(p);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_subset(f, 1 + rng() % 12, rng);
      const auto diff = oracle::differences(as_set(x), as_set(x), p);
      for (std::int64_t d = 2; d <= 4; ++d) {
        for (std::int64_t l = 1; l <= 4; ++l) {
          const auto z = extract_z(x, d, l);
          EXPECT_EQ(z, reference::extract_z(x, d, l));
          EXPECT_TRUE(extract_z(x, d, l + 1).is_subset_of(z));
          for (std::int64_t w = 0; w < p; ++w) {
            bool all = true;
            std::int64_t m = 1;
            for (std::int64_t j = 0; j < l; ++j, m = m * d % p) all = all && diff.count(m * w % p);
            EXPECT_EQ(all, z.contains(static_cast<std::uint32_t>(w)));
          }
        }
      }
    }
  }
}

TEST(VerifyInclusion, Examples) {
  auto f = make_field(101);
  const auto z = FpSet::of(f, {-4, -3, -2, -1, 0, 1, 2, 3, 4});
  const auto t = FpSet::interval(f, -18, 37);
  const auto c = verify_inclusion(z, 2, 2, t);
  EXPECT_TRUE(c.verified);
  EXPECT_FALSE(c.witness.has_value());
  const auto w = verify_inclusion(FpSet::of(f, {1}), 2, 1, FpSet::of(f, {1}));
  EXPECT_FALSE(w.verified);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(w.witness->m, 2u);
  EXPECT_EQ(w.witness->z, 1u);
  EXPECT_EQ(w.witness->product, 2u);
  EXPECT_THROW(verify_inclusion(z, 2, 0, t), Error);
  EXPECT_THROW(verify_inclusion(z, 1, 3, t), Error);
}

TEST(VerifyInclusion, FlagAgreesWithBruteForce) {
  Rng rng(8);
  auto f = make_field(31);
  for (int i = 0; i < 50; ++i) {
    const auto z = random_subset(f, rng() % 4, rng);
    const auto t = random_subset(f, rng() % 31, rng);
    const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 2);
    const std::int64_t l = 1 + static_cast<std::int64_t>(rng() % 3);
    bool ok = true;
    std::int64_t bound = 1;
    for (std::int64_t j = 0; j < l; ++j) bound *= d;
    for (std::int64_t m = 1; m <= bound; ++m)
      for (auto e : z.elements()) ok = ok && t.contains(static_cast<std::uint32_t>(m * e % 31));
    const auto c = verify_inclusion(z, d, l, t);
    EXPECT_EQ(c.verified, ok);
    EXPECT_EQ(c.witness.has_value(), !ok);
  }
}

TEST(Pipeline, AnchorAndFold) {
  EXPECT_EQ(pipeline_fold(2, 2), 6u);
  EXPECT_EQ(pipeline_fold(3, 3), 14u);
  auto f = make_field(101);
  const auto a = FpSet::interval(f, 0, 10);
  const auto target = sum_minus(a, 2, 2);
  // Z taken straight from A: the containment chain needs only X - X inside A - A.
  const auto za = extract_z(a, 2, 2);
  EXPECT_EQ(as_set(za), oracle::centered(-4, 4, 101));
  EXPECT_TRUE(verify_inclusion(za, 2, 2, target).verified);
  // Through the greedy set: 6X inside {-18..18} stops at X = {-3..3}.
  const auto s = sanders_greedy(a, pipeline_fold(2, 2));
  EXPECT_TRUE(s.certificate);
  EXPECT_EQ(as_set(s.X), oracle::centered(-3, 3, 101));
  const auto z = extract_z(s.X, 2, 2);
  EXPECT_EQ(as_set(z), oracle::centered(-3, 3, 101));
  EXPECT_TRUE(verify_inclusion(z, 2, 2, target).verified);
}
