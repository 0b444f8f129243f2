#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fplab/bitvec.hpp"
#include "fplab/field.hpp"

namespace fplab {

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A subset of F_p stored as a dense bit array of length p.
class FpSet {
 public:
  explicit FpSet(FieldRef field);
  FpSet(FieldRef field, BitVector bits);

  /// Elements are reduced mod p; duplicates after reduction are merged.
  static FpSet of(FieldRef field, std::span<const std::int64_t> elements);
  static FpSet of(FieldRef field, std::initializer_list<std::int64_t> elements);
  static FpSet full(FieldRef field);
  /// {start, start+1, ..., start+len-1} mod p.
  static FpSet interval(FieldRef field, std::int64_t start, std::uint32_t len);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(std::uint32_t x) const { return x < p() && bits_.test(x); }
  const BitVector& bits() const noexcept { return bits_; }

  std::vector<std::uint32_t> elements() const;
  /// Elements as centered representatives, sorted ascending.
  std::vector<std::int64_t> centered_elements() const;
  /// Smallest element; precondition: nonempty.
  std::uint32_t min_element() const;

  bool is_subset_of(const FpSet& o) const;
  FpSet with(std::uint32_t x) const;
  FpSet without(std::uint32_t x) const;
  FpSet set_union(const FpSet& o) const;
  FpSet set_intersection(const FpSet& o) const;
  FpSet negated() const { return dilate_by(p() - 1); }
  FpSet translate(std::int64_t t) const;
  /// lambda * A for lambda reduced mod p; lambda must be nonzero mod p.
  FpSet dilate_by(std::int64_t lambda) const;

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each_set(std::forward<F>(f));
  }

  friend bool operator==(const FpSet& a, const FpSet& b) {
    return a.p() == b.p() && a.bits_ == b.bits_;
  }

  /// "{e1, e2, ...}" using centered representatives.
  std::string str() const;

 private:
  FieldRef field_;
  BitVector bits_;
  std::size_t size_ = 0;
};

void require_same_field(const FpSet& a, const FpSet& b);

FpSet sumset(const FpSet& a, const FpSet& b);
FpSet difference_set(const FpSet& a, const FpSet& b);
FpSet product_set(const FpSet& a, const FpSet& b);
/// {a / b : a in A, b in B, b != 0}.
FpSet quotient_set(const FpSet& a, const FpSet& b);
/// lambda * A; throws ZeroDilation when lambda = 0 mod p.
FpSet dilate(const FpSet& a, std::int64_t lambda);
/// k-fold sumset kA (k >= 1).
FpSet fold_sum(const FpSet& a, std::uint32_t k);
/// k-fold product set A^k (k >= 1).
FpSet fold_product(const FpSet& a, std::uint32_t k);
/// kA - lA.
FpSet sum_minus(const FpSet& a, std::uint32_t k, std::uint32_t l);

struct DilatedSumset {
  FpSet set;
  double ratio;  // |result| / |A|
};

/// lambda_1 * A + ... + lambda_k * A.
DilatedSumset dilated_sumset(const FpSet& a, std::span<const std::int64_t> lambdas);

/// |A + A| / |A|; throws EmptySet.
Rational doubling(const FpSet& a);

struct DoublingStats {
  Rational K;
  Rational L;
};
DoublingStats doubling_pair(const FpSet& a, const FpSet& b);

/// True iff A is a run of consecutive residues (cyclically); the empty set
/// and F_p are intervals.
bool is_interval(const FpSet& a);

/// Representation counts r(s) = #{(a, b) in A x B : a + b = s}.
std::vector<std::int64_t> sum_representations(const FpSet& a, const FpSet& b);
/// r(s) = #{(a, b) in A x B : a - b = s}.
std::vector<std::int64_t> difference_representations(const FpSet& a, const FpSet& b);

}  // namespace fplab
