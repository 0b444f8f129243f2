#include "fplab/setalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fplab {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g ? g : 1), den / (g ? g : 1)};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

FpSet::FpSet(FieldRef field) : field_(std::move(field)), bits_(field_->p()) {}

FpSet::FpSet(FieldRef field, BitVector bits) : field_(std::move(field)), bits_(std::move(bits)) {
  if (bits_.length() != field_->p()) throw Error(ErrorCode::BadInput, "bit array length differs from p");
  bits_.clear_tail();
  size_ = bits_.count();
}

FpSet FpSet::of(FieldRef field, std::span<const std::int64_t> elements) {
  BitVector bits(field->p());
  for (auto e : elements) bits.set(reduce(e, field->p()));
  return FpSet(std::move(field), std::move(bits));
}

FpSet FpSet::of(FieldRef field, std::initializer_list<std::int64_t> elements) {
  return of(std::move(field), std::span<const std::int64_t>(elements.begin(), elements.size()));
}

FpSet FpSet::full(FieldRef field) {
  BitVector bits(field->p());
  for (auto& w : bits.words()) w = ~std::uint64_t{0};
  return FpSet(std::move(field), std::move(bits));
}

FpSet FpSet::interval(FieldRef field, std::int64_t start, std::uint32_t len) {
  const std::uint32_t p = field->p();
  BitVector bits(p);
  const std::uint32_t s = reduce(start, p);
  for (std::uint32_t i = 0; i < std::min(len, p); ++i) bits.set(add_mod(s, i % p, p));
  return FpSet(std::move(field), std::move(bits));
}

std::vector<std::uint32_t> FpSet::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for_each([&](std::uint32_t x) { out.push_back(x); });
  return out;
}

std::vector<std::int64_t> FpSet::centered_elements() const {
  std::vector<std::int64_t> out;
  out.reserve(size_);
  for_each([&](std::uint32_t x) { out.push_back(centered(x, p())); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t FpSet::min_element() const {
  if (empty()) throw Error(ErrorCode::EmptySet, "min_element of empty set");
  const auto w = bits_.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
  }
  return 0;
}

bool FpSet::is_subset_of(const FpSet& o) const {
  require_same_field(*this, o);
  return bits_.is_subset_of(o.bits_);
}

FpSet FpSet::with(std::uint32_t x) const {
  BitVector b = bits_;
  b.set(x % p());
  return FpSet(field_, std::move(b));
}

FpSet FpSet::without(std::uint32_t x) const {
  BitVector b = bits_;
  b.reset(x % p());
  return FpSet(field_, std::move(b));
}

FpSet FpSet::set_union(const FpSet& o) const {
  require_same_field(*this, o);
  BitVector b = bits_;
  b |= o.bits_;
  return FpSet(field_, std::move(b));
}

FpSet FpSet::set_intersection(const FpSet& o) const {
  require_same_field(*this, o);
  BitVector b = bits_;
  b &= o.bits_;
  return FpSet(field_, std::move(b));
}

FpSet FpSet::translate(std::int64_t t) const {
  return FpSet(field_, cyclic_rotate(bits_, reduce(t, p())));
}

FpSet FpSet::dilate_by(std::int64_t lambda) const {
  const std::uint32_t l = reduce(lambda, p());
  if (l == 0) throw Error(ErrorCode::ZeroDilation, "dilation by 0 mod p");
  BitVector b(p());
  for_each([&](std::uint32_t x) { b.set(mul_mod(x, l, p())); });
  return FpSet(field_, std::move(b));
}

std::string FpSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto e : centered_elements()) {
    if (!first) os << ", ";
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

void require_same_field(const FpSet& a, const FpSet& b) {
  if (a.p() != b.p()) {
    throw Error(ErrorCode::FieldMismatch,
                "sets over F_" + std::to_string(a.p()) + " and F_" + std::to_string(b.p()));
  }
}

FpSet sumset(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  return FpSet(a.field(), cyclic_sumset(a.bits(), b.bits()));
}

FpSet difference_set(const FpSet& a, const FpSet& b) { return sumset(a, b.negated()); }

namespace {

// Nonzero elements mapped to their discrete logs, as a subset of Z/(p-1).
BitVector log_image(const FpSet& s) {
  const auto& f = *s.field();
  BitVector out(f.p() - 1);
  s.for_each([&](std::uint32_t x) {
    if (x != 0) out.set(f.dlog(x));
  });
  return out;
}

BitVector log_image_inverted(const FpSet& s) {
  const auto& f = *s.field();
  const std::uint32_t n = f.p() - 1;
  BitVector out(n);
  s.for_each([&](std::uint32_t x) {
    if (x != 0) out.set((n - f.dlog(x)) % n);
  });
  return out;
}

FpSet from_log_image(const FieldRef& field, const BitVector& logs, bool with_zero) {
  BitVector bits(field->p());
  logs.for_each_set([&](std::uint32_t t) { bits.set(field->exp(t)); });
  if (with_zero) bits.set(0);
  return FpSet(field, std::move(bits));
}

}  // namespace

FpSet product_set(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  if (a.empty() || b.empty()) return FpSet(a.field());
  const bool zero = a.contains(0) || b.contains(0);
  return from_log_image(a.field(), cyclic_sumset(log_image(a), log_image(b)), zero);
}

FpSet quotient_set(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const bool has_denominator = b.size() > (b.contains(0) ? 1U : 0U);
  if (a.empty() || !has_denominator) return FpSet(a.field());
  return from_log_image(a.field(), cyclic_sumset(log_image(a), log_image_inverted(b)), a.contains(0));
}

FpSet dilate(const FpSet& a, std::int64_t lambda) { return a.dilate_by(lambda); }

FpSet fold_sum(const FpSet& a, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::BadParams, "fold count must be >= 1");
  FpSet acc = a;
  for (std::uint32_t i = 1; i < k; ++i) acc = sumset(acc, a);
  return acc;
}

FpSet fold_product(const FpSet& a, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::BadParams, "fold count must be >= 1");
  FpSet acc = a;
  for (std::uint32_t i = 1; i < k; ++i) acc = product_set(acc, a);
  return acc;
}

FpSet sum_minus(const FpSet& a, std::uint32_t k, std::uint32_t l) {
  return difference_set(fold_sum(a, k), fold_sum(a, l));
}

DilatedSumset dilated_sumset(const FpSet& a, std::span<const std::int64_t> lambdas) {
  if (lambdas.empty()) throw Error(ErrorCode::BadParams, "no dilation factors");
  for (auto l : lambdas) {
    if (reduce(l, a.p()) == 0) throw Error(ErrorCode::ZeroDilation, "dilation factor " + std::to_string(l));
  }
  FpSet acc = a.dilate_by(lambdas[0]);
  for (std::size_t i = 1; i < lambdas.size(); ++i) acc = sumset(acc, a.dilate_by(lambdas[i]));
  const double ratio = a.empty() ? 0.0 : static_cast<double>(acc.size()) / static_cast<double>(a.size());
  return {std::move(acc), ratio};
}

Rational doubling(const FpSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "doubling of the empty set");
  return Rational::of(static_cast<std::int64_t>(sumset(a, a).size()), static_cast<std::int64_t>(a.size()));
}

DoublingStats doubling_pair(const FpSet& a, const FpSet& b) { return {doubling(a), doubling(b)}; }

bool is_interval(const FpSet& a) {
  const std::uint32_t p = a.p();
  if (a.empty() || a.size() == p) return true;
  // An interval has exactly one element x with x in A and x-1 not in A.
  std::size_t starts = 0;
  a.for_each([&](std::uint32_t x) {
    if (!a.contains(x == 0 ? p - 1 : x - 1)) ++starts;
  });
  return starts == 1;
}

namespace {

std::vector<std::int64_t> representations(const FpSet& a, const FpSet& b, bool difference) {
  require_same_field(a, b);
  const std::uint32_t p = a.p();
  std::vector<std::int64_t> r(p, 0);
  // r(s) = sum over the smaller operand, evaluated independently per s.
  const bool iterate_a = a.size() <= b.size();
  const auto small = iterate_a ? a.elements() : b.elements();
  const FpSet& other = iterate_a ? b : a;
#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(p); ++si) {
    const auto s = static_cast<std::uint32_t>(si);
    std::int64_t c = 0;
    for (std::uint32_t x : small) {
      std::uint32_t y;
      if (!difference) {
        y = sub_mod(s, x, p);
      } else if (iterate_a) {
        y = sub_mod(x, s, p);  // a - b = s  =>  b = a - s
      } else {
        y = add_mod(s, x, p);  // a = s + b
      }
      c += other.contains(y) ? 1 : 0;
    }
    r[s] = c;
  }
  return r;
}

}  // namespace

std::vector<std::int64_t> sum_representations(const FpSet& a, const FpSet& b) {
  return representations(a, b, false);
}

std::vector<std::int64_t> difference_representations(const FpSet& a, const FpSet& b) {
  return representations(a, b, true);
}

}  // namespace fplab
