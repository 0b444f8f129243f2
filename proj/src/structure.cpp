#include "fplab/structure.hpp"

#include <algorithm>
#include <numeric>

#include "fplab/spectral.hpp"

namespace fplab {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

BsgResult bsg_extract(const FpSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "bsg_extract");
  const std::uint32_t p = a.p();
  const auto r = sum_representations(a, a);
  std::int64_t energy = 0;
  for (auto v : r) energy += v * v;
  const auto n = static_cast<std::int64_t>(a.size());

  // r(s) >= |A| / (2K) = E / (2 |A|^2), compared exactly.
  std::vector<bool> popular(p);
  std::size_t popular_count = 0;
  for (std::uint32_t s = 0; s < p; ++s) {
    popular[s] = r[s] > 0 && 2 * n * n * r[s] >= energy;
    popular_count += popular[s] ? 1 : 0;
  }

  const auto elems = a.elements();
  DisjointSets ds(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (popular[add_mod(elems[i], elems[j], p)]) ds.join(i, j);
    }
  }
  // Roots are the smallest index of each component, so scanning in order
  // breaks ties toward the component holding the smallest element.
  std::vector<std::size_t> comp_size(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) ++comp_size[ds.find(i)];
  std::size_t best = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (comp_size[i] > comp_size[best]) best = i;
  }
  BitVector bits(p);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (ds.find(i) == best) bits.set(elems[i]);
  }
  FpSet sub(a.field(), std::move(bits));
  BsgResult out{sub, Rational::of(n * n * n, energy), 0.0, 0.0, energy, popular_count};
  out.size_ratio = static_cast<double>(sub.size()) / static_cast<double>(n);
  out.doubling_out = static_cast<double>(difference_set(sub, sub).size()) / static_cast<double>(sub.size());
  return out;
}

std::vector<std::uint32_t> centered_order(const FpSet& s) {
  const std::uint32_t p = s.p();
  auto elems = s.elements();
  std::sort(elems.begin(), elems.end(), [p](std::uint32_t x, std::uint32_t y) {
    const auto cx = centered(x, p);
    const auto cy = centered(y, p);
    const auto ax = cx < 0 ? -cx : cx;
    const auto ay = cy < 0 ? -cy : cy;
    if (ax != ay) return ax < ay;
    return cx > cy;
  });
  return elems;
}

SandersResult sanders_greedy(const FpSet& a, std::uint32_t k) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "sanders_greedy");
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be >= 1");
  const std::uint32_t p = a.p();
  const FpSet diff = difference_set(a, a);
  const FpSet target = sum_minus(a, 2, 2);
  const auto candidates = centered_order(diff);

  // folds[j] = jX for j in [0, k], with 0X = {0}. Adding x turns
  // (X + x) k-fold into the union of (k - i)X + i x.
  std::vector<BitVector> folds(k + 1, BitVector(p));
  folds[0].set(0);
  BitVector accepted(p);
  for (std::uint32_t x : candidates) {
    bool fits = true;
    for (std::uint32_t i = 0; i <= k && fits; ++i) {
      if (folds[k - i].none()) continue;
      const auto shifted = cyclic_rotate(folds[k - i], mul_mod(i, x, p));
      fits = shifted.is_subset_of(target.bits());
    }
    if (!fits) continue;
    accepted.set(x);
    for (std::uint32_t j = k; j >= 1; --j) {
      BitVector next = folds[j];
      for (std::uint32_t i = 1; i <= j; ++i) {
        if (!folds[j - i].none()) next |= cyclic_rotate(folds[j - i], mul_mod(i, x, p));
      }
      folds[j] = std::move(next);
    }
  }
  FpSet X(a.field(), std::move(accepted));
  SandersResult out{X, k, target, false, 0.0, candidates.size()};
  out.certificate = !X.empty() && fold_sum(X, k).is_subset_of(target);
  out.size_ratio = static_cast<double>(X.size()) / static_cast<double>(a.size());
  return out;
}

FpSet extract_z(const FpSet& x, std::int64_t d, std::int64_t l) {
  if (d < 2 || l < 1) throw Error(ErrorCode::BadParams, "extract_z needs d >= 2 and l >= 1");
  const std::uint32_t p = x.p();
  if (reduce(d, p) == 0) throw Error(ErrorCode::BadParams, "d is divisible by p");
  const FpSet diff = difference_set(x, x);
  const auto dinv = static_cast<std::int64_t>(x.field()->inverse(reduce(d, p)));
  FpSet z = diff;
  std::int64_t scale = 1;  // d^{-j}
  for (std::int64_t j = 1; j < l; ++j) {
    scale = static_cast<std::int64_t>(mul_mod(static_cast<std::uint32_t>(scale), static_cast<std::uint32_t>(dinv), p));
    z = z.set_intersection(diff.dilate_by(scale));
  }
  return z;
}

InclusionCert verify_inclusion(const FpSet& z, std::int64_t d, std::int64_t l, const FpSet& target) {
  require_same_field(z, target);
  if (d < 2 || l < 1) throw Error(ErrorCode::BadParams, "verify_inclusion needs d >= 2 and l >= 1");
  std::uint64_t range = 1;
  for (std::int64_t i = 0; i < l; ++i) {
    range *= static_cast<std::uint64_t>(d);
    if (range > (std::uint64_t{1} << 32)) throw Error(ErrorCode::BadParams, "d^l exceeds 2^32");
  }
  const std::uint32_t p = z.p();
  const auto elems = z.elements();
  // First violating z for each m; the smallest violating m wins.
  std::uint64_t first_bad_m = range + 1;
  InclusionWitness found{};
#pragma omp parallel
  {
    std::uint64_t local_m = range + 1;
    InclusionWitness local{};
#pragma omp for schedule(static)
    for (std::int64_t mi = 1; mi <= static_cast<std::int64_t>(range); ++mi) {
      const auto m = static_cast<std::uint64_t>(mi);
      if (m >= local_m) continue;
      const auto mr = static_cast<std::uint32_t>(m % p);
      for (auto e : elems) {
        const std::uint32_t prod = mul_mod(mr, e, p);
        if (!target.contains(prod)) {
          local_m = m;
          local = {m, e, prod};
          break;
        }
      }
    }
#pragma omp critical
    {
      if (local_m < first_bad_m) {
        first_bad_m = local_m;
        found = local;
      }
    }
  }
  InclusionCert cert{z, d, l, target, first_bad_m > range, std::nullopt};
  if (!cert.verified) cert.witness = found;
  return cert;
}

std::uint32_t pipeline_fold(std::int64_t d, std::int64_t l) {
  return static_cast<std::uint32_t>(2 * (l * (d - 1) + 1));
}

}  // namespace fplab
