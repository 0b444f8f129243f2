#include "fplab/field.hpp"

#include <numbers>
#include <numeric>
#include <string>

namespace fplab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TrivialCharacter: return "TrivialCharacter";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroDilation: return "ZeroDilation";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ZeroInA: return "ZeroInA";
    case ErrorCode::NotInterval: return "NotInterval";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpectralMismatch: return "SpectralMismatch";
  }
  return "Unknown";
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  if (n < (std::uint64_t{1} << 32)) {
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
      if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 1; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::NotPrime, "no primitive root for " + std::to_string(p));
}

FieldRef make_field(std::uint64_t p, std::uint64_t table_bound) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  }
  if (p > table_bound) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(p) + " exceeds table bound " + std::to_string(table_bound));
  }
  std::shared_ptr<PrimeField> f(new PrimeField());
  f->p_ = static_cast<std::uint32_t>(p);
  f->g_ = least_primitive_root(f->p_);
  f->dlog_.assign(f->p_, 0);
  f->pow_.assign(f->p_ - 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t t = 0; t + 1 < f->p_; ++t) {
    f->pow_[t] = x;
    f->dlog_[x] = t;
    x = mul_mod(x, f->g_, f->p_);
  }
  return f;
}

FieldRef PrimeField::from_tables(std::uint32_t p, std::uint32_t g, std::vector<std::uint32_t> dlog) {
  if (dlog.size() != p) throw Error(ErrorCode::BadInput, "dlog table must have length p");
  std::shared_ptr<PrimeField> f(new PrimeField());
  f->p_ = p;
  f->g_ = g;
  f->dlog_ = std::move(dlog);
  f->pow_.assign(p - 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t t = 0; t + 1 < p; ++t) {
    f->pow_[t] = x;
    x = mul_mod(x, g, p);
  }
  return f;
}

std::uint32_t PrimeField::inverse(std::uint32_t x) const {
  if (x == 0) throw Error(ErrorCode::BadInput, "0 has no inverse");
  const std::uint32_t t = dlog_[x];
  return pow_[t == 0 ? 0 : p_ - 1 - t];
}

std::complex<double> UnitValue::to_complex() const {
  if (!index_) return {0.0, 0.0};
  // Quarter turns are returned exactly.
  const std::uint64_t q = 4ULL * *index_;
  if (q % modulus_ == 0) {
    static constexpr std::complex<double> kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kQuarter[q / modulus_];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(*index_) / modulus_);
}

UnitValue operator*(const UnitValue& a, const UnitValue& b) {
  if (a.is_zero() || b.is_zero()) return UnitValue::zero(a.modulus_);
  return UnitValue::root(a.modulus_, (*a.index_ + *b.index_) % a.modulus_);
}

Character::Character(FieldRef field, std::int64_t k) : field_(std::move(field)) {
  const std::uint32_t n = field_->p() - 1;
  const std::int64_t reduced = ((k % n) + n) % n;
  if (reduced == 0) {
    throw Error(ErrorCode::TrivialCharacter, "k = " + std::to_string(k) + " gives the trivial character");
  }
  k_ = static_cast<std::uint32_t>(reduced);
  const std::uint32_t gcd = std::gcd(k_, n);
  order_ = n / gcd;
  const std::uint32_t step = k_ / gcd;

  table_.assign(field_->p(), -1);
  for (std::uint32_t x = 1; x < field_->p(); ++x) {
    const std::uint64_t t = field_->dlog(x);
    table_[x] = static_cast<std::int32_t>(t * step % order_);
  }
  roots_.resize(order_);
  for (std::uint32_t j = 0; j < order_; ++j) {
    roots_[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / order_);
  }
  // Exact values on the real axis.
  roots_[0] = {1.0, 0.0};
  if (order_ % 2 == 0) roots_[order_ / 2] = {-1.0, 0.0};
  if (order_ % 4 == 0) {
    roots_[order_ / 4] = {0.0, 1.0};
    roots_[3 * order_ / 4] = {0.0, -1.0};
  }
}

UnitValue Character::eval(std::uint32_t x) const {
  const std::uint32_t n = field_->p() - 1;
  if (table_[x] < 0) return UnitValue::zero(n);
  return UnitValue::root(n, static_cast<std::uint32_t>(table_[x]) * (n / order_));
}

Character Character::conjugate() const { return Character(field_, field_->p() - 1 - k_); }

Character legendre(const FieldRef& field) { return Character(field, (field->p() - 1) / 2); }

}  // namespace fplab
