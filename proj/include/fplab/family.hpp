#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/incidence.hpp"
#include "fplab/setalg.hpp"

namespace fplab {

/// Parameterized set family, written `kind(key=value,...)`:
///
///   interval(n=N[,start=S])
///   ap(n=N,step=D[,start=S])
///   gap(dims=N1:N2:...[,steps=D1:D2:...][,start=S])    rank = number of dims
///   random(n=N[,seed=U])
///   mult_subgroup(order=M)                             M divides p - 1
///   quadratic_residues
///   dilate_union(base=<family>,lambdas=L1:L2:...)      union of L_i * base
///
/// Sizes accept `p^E` (rounded up) optionally followed by `+C` or `-C`, so
/// interval(n=p^0.5+2) has ceil(sqrt p) + 2 elements. Default GAP steps are
/// 1, 2 N1, 4 N1 N2, ... so the progression is proper over the integers.
struct Family {
  std::string kind;
  std::map<std::string, std::string> params;

  static Family parse(std::string_view text);
  /// Canonical text; parse(str()) == *this.
  std::string str() const;
  friend bool operator==(const Family&, const Family&) = default;
};

/// All randomness in the library comes from this generator.
using Rng = std::mt19937_64;

/// Evaluate a size expression for modulus p.
std::int64_t eval_size(std::string_view text, std::uint32_t p);

/// The deterministic set for `family`; `default_seed` is used by random()
/// when the family has no seed. Throws BadFamily.
FpSet generate(const FieldRef& field, const Family& family, std::uint64_t default_seed = 1);
FpSet generate(const FieldRef& field, std::string_view family, std::uint64_t default_seed = 1);

/// Uniform n-subset of F_p.
FpSet random_subset(const FieldRef& field, std::size_t n, Rng& rng);
/// Uniform function values for property tests.
std::vector<Point3> random_points(std::uint32_t p, std::size_t n, Rng& rng);
std::vector<Plane> random_planes(std::uint32_t p, std::size_t n, Rng& rng);

}  // namespace fplab
