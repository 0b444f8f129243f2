#include "fplab/balog.hpp"

#include <cmath>

#include "fplab/field.hpp"

namespace fplab {

CoverageResult coverage(const std::string& expression, const FpSet& a) {
  const SetEnv env{{"A", a}};
  CoverageResult out{expression, eval_expr(expression, env), false, {}};
  out.covered = out.achieved.size() == a.p();
  for (std::uint32_t x = 0; x < a.p() && out.missing_sample.size() < 10; ++x) {
    if (!out.achieved.contains(x)) out.missing_sample.push_back(x);
  }
  return out;
}

Report redei_check(const FpSet& a) {
  if (a.size() <= 1) throw Error(ErrorCode::TooSmall, "redei_check needs |A| > 1");
  const FpSet d = difference_set(a, a);
  const FpSet q = quotient_set(d, d);
  const double n = static_cast<double>(a.size());
  const double bound = std::min(static_cast<double>(a.p()), (n * n + 3.0) / 2.0);
  const auto qs = static_cast<double>(q.size());
  Report rep;
  rep.kind = "redei";
  rep.input("p", static_cast<std::int64_t>(a.p()));
  rep.quantity("size_a", static_cast<std::int64_t>(a.size()))
      .quantity("quotient_size", static_cast<std::int64_t>(q.size()))
      .quantity("bound", bound);
  rep.flag("paper_holds", qs >= bound).flag("direction_holds", qs + 1.0 >= bound);
  if (qs < bound) rep.note("literal bound fails; counting the infinite direction gives |Q|+1");
  return rep;
}

IteratedResult balog_iterated(const FpSet& a, std::uint32_t k) {
  if (a.size() < 2) throw Error(ErrorCode::TooSmall, "balog_iterated needs |A| >= 2");
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be >= 1");
  IteratedResult out{coverage("(A-A)^" + std::to_string(2 * k + 1), a), 0.0, false};
  out.size_threshold = std::pow(static_cast<double>(a.p()), 0.5 + std::ldexp(1.0, -static_cast<int>(k)));
  out.hypothesis = static_cast<double>(a.size()) >= out.size_threshold;
  return out;
}

BalogNewResult balog_new_check(const FpSet& a, double c) {
  if (a.size() < 2) throw Error(ErrorCode::TooSmall, "balog_new_check needs |A| >= 2");
  BalogNewResult out{{coverage(kBalogExpressions[0], a), coverage(kBalogExpressions[1], a),
                      coverage(kBalogExpressions[2], a)},
                     0.0,
                     false};
  const double p = a.p();
  out.size_threshold = std::exp(-c * std::pow(std::log2(p), 0.2)) * std::sqrt(p);
  out.above_threshold = static_cast<double>(a.size()) >= out.size_threshold;
  return out;
}

Report qr_decomposition_check(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.p();
  BitVector qr_bits(p);
  for (std::uint32_t x = 1; x < p; ++x) qr_bits.set(mul_mod(x, x, p));
  const FpSet qr(a.field(), std::move(qr_bits));
  const FpSet sums = sumset(a, b);
  const bool in_qr = sums.is_subset_of(qr);
  const auto overlap = static_cast<std::int64_t>(b.set_intersection(a.negated()).size());
  const auto product = static_cast<std::int64_t>(a.size() * b.size());
  const std::int64_t rhs = (p - 1) / 2 + overlap;
  Report rep;
  rep.kind = "qr_decomposition";
  rep.input("p", static_cast<std::int64_t>(p));
  rep.quantity("size_a", static_cast<std::int64_t>(a.size()))
      .quantity("size_b", static_cast<std::int64_t>(b.size()))
      .quantity("product", product)
      .quantity("overlap", overlap)
      .quantity("rhs", rhs)
      .quantity("sumset_size", static_cast<std::int64_t>(sums.size()));
  rep.flag("sums_in_qr", in_qr);
  if (in_qr) {
    rep.flag("inequality_holds", product <= rhs);
    rep.flag("sum_is_all_qr", sums == qr);
  } else {
    rep.note("A+B is not contained in the quadratic residues; inequality not evaluated");
  }
  return rep;
}

}  // namespace fplab
