#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/setalg.hpp"

namespace fplab {

struct BsgResult {
  FpSet subset;
  Rational K_in;           // |A|^3 / E+(A)
  double size_ratio = 0;   // |A'| / |A|
  double doubling_out = 0; // |A' - A'| / |A'|
  std::int64_t energy = 0;
  std::size_t popular_sums = 0;
};

/// Popular-sum graph extraction: with K = |A|^3 / E+(A), keep the sums s with
/// r_{A+A}(s) >= |A| / (2K), join a and b when a + b is popular and return the
/// largest connected component (ties: the one holding the smallest element).
BsgResult bsg_extract(const FpSet& a);

struct SandersResult {
  FpSet X;
  std::uint32_t k = 0;
  FpSet target;            // 2A - 2A
  bool certificate = false; // kX inside 2A - 2A, recomputed independently
  double size_ratio = 0;   // |X| / |A|
  std::size_t candidates = 0;
};

/// Greedy X inside A - A with kX inside 2A - 2A. Candidates are scanned by
/// increasing |centered representative|, positive first on ties.
SandersResult sanders_greedy(const FpSet& a, std::uint32_t k);

/// Candidate order used by sanders_greedy.
std::vector<std::uint32_t> centered_order(const FpSet& s);

/// Maximal Z with d^j Z inside X - X for every j in [0, l - 1].
FpSet extract_z(const FpSet& x, std::int64_t d, std::int64_t l);

struct InclusionWitness {
  std::uint64_t m;
  std::uint32_t z;
  std::uint32_t product;  // m z mod p, not in the target
};

struct InclusionCert {
  FpSet Z;
  std::int64_t d = 0;
  std::int64_t l = 0;
  FpSet target;
  bool verified = false;
  std::optional<InclusionWitness> witness;  // smallest m, then smallest z
};

/// Checks m z in T for all m in [1, d^l], z in Z. Throws BadParams for d < 2,
/// l < 1 or d^l beyond 2^32.
InclusionCert verify_inclusion(const FpSet& z, std::int64_t d, std::int64_t l, const FpSet& target);

/// Fold count used for the pipeline: 2 (l (d - 1) + 1).
std::uint32_t pipeline_fold(std::int64_t d, std::int64_t l);

}  // namespace fplab
