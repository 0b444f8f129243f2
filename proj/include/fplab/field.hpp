#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fplab/error.hpp"

namespace fplab {

/// Largest modulus for which make_field builds its tables by default.
inline constexpr std::uint64_t kDefaultTableBound = std::uint64_t{1} << 24;

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Reduce an arbitrary signed integer into [0, p).
inline std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Representative of x in (-(p-1)/2 .. (p-1)/2]. Display convention only.
inline std::int64_t centered(std::uint32_t x, std::uint32_t p) {
  return x > p / 2 ? static_cast<std::int64_t>(x) - p : static_cast<std::int64_t>(x);
}

/// Deterministic primality test (trial division suffices below 2^32).
bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Prime field F_p with its least primitive root and a full discrete-log
/// table. Immutable once built; shared between sets via FieldRef.
class PrimeField {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t generator() const noexcept { return g_; }

  /// t in [0, p-2] with g^t = x. Precondition: x in [1, p-1].
  std::uint32_t dlog(std::uint32_t x) const { return dlog_[x]; }
  /// g^t for t in [0, p-2].
  std::uint32_t exp(std::uint32_t t) const { return pow_[t]; }
  std::uint32_t inverse(std::uint32_t x) const;

  std::span<const std::uint32_t> dlog_table() const noexcept { return dlog_; }

  /// Assemble a field from externally supplied tables without validation.
  /// Used to inject faults into the verification suite.
  static std::shared_ptr<const PrimeField> from_tables(std::uint32_t p, std::uint32_t g,
                                                       std::vector<std::uint32_t> dlog);

 private:
  friend std::shared_ptr<const PrimeField> make_field(std::uint64_t, std::uint64_t);
  PrimeField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> dlog_;  // index 0 unused
  std::vector<std::uint32_t> pow_;
};

using FieldRef = std::shared_ptr<const PrimeField>;

FieldRef make_field(std::uint64_t p, std::uint64_t table_bound = kDefaultTableBound);

/// Smallest primitive root of p found by ascending trial.
std::uint32_t least_primitive_root(std::uint32_t p);

/// Value of a multiplicative character: Zero, or exp(2 pi i * index / modulus)
/// with modulus = p - 1.
class UnitValue {
 public:
  static UnitValue zero(std::uint32_t modulus) { return UnitValue(modulus, std::nullopt); }
  static UnitValue root(std::uint32_t modulus, std::uint32_t index) {
    return UnitValue(modulus, index % modulus);
  }

  bool is_zero() const noexcept { return !index_.has_value(); }
  std::uint32_t index() const { return index_.value(); }
  std::uint32_t modulus() const noexcept { return modulus_; }

  std::complex<double> to_complex() const;

  friend UnitValue operator*(const UnitValue& a, const UnitValue& b);
  friend bool operator==(const UnitValue&, const UnitValue&) = default;

 private:
  UnitValue(std::uint32_t modulus, std::optional<std::uint32_t> index)
      : modulus_(modulus), index_(index) {}

  std::uint32_t modulus_;
  std::optional<std::uint32_t> index_;
};

/// Nontrivial multiplicative character chi_k(g^t) = exp(2 pi i k t / (p-1)),
/// extended by chi(0) = 0.
///
/// Values are kept exact as indices into the group of order-th roots of
/// unity: chi(x) = zeta_order^{root_index(x)}. The table is filled once at
/// construction.
class Character {
 public:
  Character(FieldRef field, std::int64_t k);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_quadratic() const noexcept { return order_ == 2; }

  UnitValue eval(std::uint32_t x) const;

  /// chi(x) as an index in Z/order, or -1 for x = 0.
  std::int32_t root_index(std::uint32_t x) const { return table_[x]; }
  std::span<const std::int32_t> root_table() const noexcept { return table_; }
  /// zeta_order^j.
  std::complex<double> root(std::uint32_t j) const { return roots_[j % order_]; }
  std::complex<double> value(std::uint32_t x) const {
    return table_[x] < 0 ? std::complex<double>{} : roots_[static_cast<std::uint32_t>(table_[x])];
  }
  /// Integer value in {-1, 0, 1}; only meaningful for the quadratic character.
  int sign(std::uint32_t x) const { return table_[x] < 0 ? 0 : (table_[x] == 0 ? 1 : -1); }

  Character conjugate() const;

 private:
  FieldRef field_;
  std::uint32_t k_;
  std::uint32_t order_;
  std::vector<std::int32_t> table_;
  std::vector<std::complex<double>> roots_;
};

inline UnitValue char_eval(const Character& chi, std::uint32_t x) { return chi.eval(x); }

/// The quadratic (Legendre) character of the field.
Character legendre(const FieldRef& field);

}  // namespace fplab
