#pragma once

#include <complex>
#include <cstdint>

#include "fplab/field.hpp"
#include "fplab/incidence.hpp"
#include "fplab/setalg.hpp"
#include "fplab/spectral.hpp"

/// Serial brute-force versions of the parallel kernels, written straight from
/// the defining formulas. Tests, the verification suite and the benchmark
/// compare the kernels against these.
namespace fplab::reference {

FpSet sumset(const FpSet& a, const FpSet& b);
FpSet product_set(const FpSet& a, const FpSet& b);
FpSet quotient_set(const FpSet& a, const FpSet& b);

DenseFunction dft(const DenseFunction& f);
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);

/// Quadruple loops.
std::int64_t additive_energy(const FpSet& a, const FpSet& b);
std::int64_t mult_energy(const FpSet& a, const FpSet& b);
/// Loop over A^2 x B^4.
std::int64_t count_system(const FpSet& a, const FpSet& b);
/// Loop over A^6.
std::int64_t count_dilate_eq(const FpSet& a, std::uint32_t xi);
/// Loop over all (s, a, b, s', a', b').
std::int64_t count_skew_products(const FpSet& a, const FpSet& b);

/// Pair loop with chi(a + b) evaluated from the discrete log each time.
std::complex<double> character_sum(const Character& chi, const FpSet& a, const FpSet& b);
/// Direct triple loop in complex arithmetic.
double moment_lhs(const Character& chi, const FpSet& interval, std::uint32_t r);

/// Double loop over points and planes.
std::int64_t count_incidences(const PointSet3& pts, const PlaneSet& planes);
/// For every pair, count the points on their line by a collinearity test.
std::int64_t max_collinear(const PointSet3& pts);

/// Elementwise: z with d^j z in X - X for all j < l.
FpSet extract_z(const FpSet& x, std::int64_t d, std::int64_t l);

}  // namespace fplab::reference
