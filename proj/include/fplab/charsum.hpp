#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fplab/field.hpp"
#include "fplab/report.hpp"
#include "fplab/setalg.hpp"

namespace fplab {

struct CharSumResult {
  std::complex<double> value;
  double magnitude = 0.0;
  double normalized = 0.0;  // magnitude / (|A| |B|)
  /// Exact value when the character has order 2.
  std::optional<std::int64_t> exact;
};

/// sum_{a in A, b in B} chi(a + b). The sum is accumulated as integer counts
/// per root of unity and only then combined in floating point.
CharSumResult character_sum(const Character& chi, const FpSet& a, const FpSet& b);

struct MomentOptions {
  /// Exhaustive evaluation over all (u1, u2) up to this modulus; sampled above.
  std::uint32_t exhaustive_limit = 1024;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
};

struct MomentResult {
  double lhs = 0.0;  // estimate when sampled
  double rhs = 0.0;
  bool holds = false;  // lhs < rhs
  bool sampled = false;
  std::uint64_t pairs_evaluated = 0;
  /// Exact lhs for order-2 characters evaluated exhaustively.
  std::optional<std::int64_t> exact_lhs;
};

/// sum_{u1, u2 in F_p} |sum_{t in I} chi(u1 + t) conj(chi)(u2 + t)|^{2r}
/// against p^2 |I|^r r^{2r} + 4 r^2 p |I|^{2r}. Throws NotInterval.
MomentResult moment_sum(const Character& chi, const FpSet& interval, std::uint32_t r,
                        const MomentOptions& opts = {});

/// Parameters for the explicit bound formulas. Unset values are reported as
/// MissingParam by bound_eval when the formula needs them.
struct BoundParams {
  std::optional<double> p;
  std::optional<double> K;
  std::optional<double> L;
  std::optional<double> delta;
  std::optional<double> r;
  std::optional<double> interval_size;
  std::optional<double> size_a;
  std::optional<double> size_b;
  std::optional<double> c;    // defaults to 1
  std::optional<double> CK;   // caller-supplied C(K) for thm1_param
};

enum class BoundName { Thm2, Thm4, Lemma1, Cor1SmallDoubling, Cor1General, Thm1Param };

BoundName parse_bound_name(std::string_view name);

/// Numeric value of a named bound; all logarithms base 2. thm2, thm4 and
/// thm1_param are normalized (factor |A||B| omitted) unless both sizes are
/// given.
double bound_eval(BoundName name, const BoundParams& params);

/// Exponent parameter l = (delta log p / log^2 K)^{1/3} behind the thm2 bound.
double thm2_level(double p, double K, double delta);

struct PaleyOptions {
  double delta = 0.5;
  double c = 1.0;
};

/// Normalized character sum with the doubling constants of A and B, the thm2
/// and thm4 bound values and their hypotheses.
Report paley_profile(const Character& chi, const FpSet& a, const FpSet& b, const PaleyOptions& opts = {});

}  // namespace fplab
