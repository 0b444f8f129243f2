#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fplab/setalg.hpp"

namespace fplab {

/// f : F_p -> C as a dense length-p table.
class DenseFunction {
 public:
  explicit DenseFunction(FieldRef field);
  DenseFunction(FieldRef field, std::vector<std::complex<double>> values);
  static DenseFunction indicator(const FpSet& s);
  static DenseFunction delta(FieldRef field, std::uint32_t at);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }
  std::complex<double> operator[](std::uint32_t x) const { return values_[x]; }
  std::complex<double>& operator[](std::uint32_t x) { return values_[x]; }

 private:
  FieldRef field_;
  std::vector<std::complex<double>> values_;
};

/// e(-t/p) for t in [0, p).
std::vector<std::complex<double>> twiddles(std::uint32_t p);

/// f^(xi) = sum_x f(x) e(-xi x), direct O(p^2) evaluation.
DenseFunction dft(const DenseFunction& f);
/// Transform of an indicator, O(p |S|).
DenseFunction dft_indicator(const FpSet& s);
/// (f * g)(x) = sum_y f(y) g(x - y).
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);

/// Exact count alongside its Fourier-side value.
struct EnergyReport {
  std::int64_t direct_count = 0;
  double spectral_value = 0.0;
  bool agreement = false;  // |direct - spectral| < 0.5
};

/// Tolerance under which a floating spectral value may stand for an integer.
inline constexpr double kRoundingTolerance = 0.5;

/// E+(A, B) = #{a1 + b1 = a2 + b2}, checked against
/// (1/p) sum_xi |A^(xi)|^2 |B^(xi)|^2. Throws SpectralMismatch if the two
/// routes disagree.
EnergyReport additive_energy(const FpSet& a, const FpSet& b);

/// E×(A, B) = #{a1 b1 = a2 b2}, zeros included. The spectral side treats the
/// zero products exactly and the rest with characters of F_p^*.
EnergyReport mult_energy(const FpSet& a, const FpSet& b);

/// Number of (a, a', b1, b1', b2, b2') in A^2 x B^4 with b1/a = b1'/a' and
/// b2/a = b2'/a', by grouping the keys (b1/a, b2/a). Throws ZeroInA.
std::int64_t count_system(const FpSet& a, const FpSet& b);

/// #{(s, a, b, s', a', b') : (s - a) b = (s' - a') b'} with s, s' in A+A,
/// a, a' in A, b, b' in B. Equals the incidence count of the skew product
/// configuration when 0 is not in B.
std::int64_t count_skew_products(const FpSet& a, const FpSet& b);

struct DilateEqCount {
  std::int64_t count = 0;
  double spectral_value = 0.0;
};

/// Solutions in A^6 of xi (a1 - a2) = a3 + a4 - a5 - a6, cross-checked against
/// p^-1 sum_x |A^(xi x)|^2 |A^(x)|^4. Throws SpectralMismatch on disagreement.
DilateEqCount count_dilate_eq(const FpSet& a, std::uint32_t xi);
/// count_dilate_eq for every xi in F_p.
std::vector<DilateEqCount> count_dilate_eq_all(const FpSet& a);

}  // namespace fplab
