#include "fplab/reference.hpp"

#include <cmath>
#include <numbers>

namespace fplab::reference {

namespace {

template <typename Op>
FpSet pairwise(const FpSet& a, const FpSet& b, Op op) {
  require_same_field(a, b);
  BitVector bits(a.p());
  a.for_each([&](std::uint32_t x) { b.for_each([&](std::uint32_t y) { op(bits, x, y); }); });
  return FpSet(a.field(), std::move(bits));
}

}  // namespace

FpSet sumset(const FpSet& a, const FpSet& b) {
  const std::uint32_t p = a.p();
  return pairwise(a, b, [p](BitVector& out, std::uint32_t x, std::uint32_t y) { out.set((x + y) % p); });
}

FpSet product_set(const FpSet& a, const FpSet& b) {
  const std::uint32_t p = a.p();
  return pairwise(a, b, [p](BitVector& out, std::uint32_t x, std::uint32_t y) {
    out.set(static_cast<std::uint64_t>(x) * y % p);
  });
}

FpSet quotient_set(const FpSet& a, const FpSet& b) {
  const std::uint32_t p = a.p();
  return pairwise(a, b, [p](BitVector& out, std::uint32_t x, std::uint32_t y) {
    if (y == 0) return;
    out.set(static_cast<std::uint64_t>(x) * pow_mod(y, p - 2, p) % p);
  });
}

DenseFunction dft(const DenseFunction& f) {
  const std::uint32_t p = f.p();
  DenseFunction out(f.field());
  for (std::uint32_t xi = 0; xi < p; ++xi) {
    std::complex<double> acc{};
    for (std::uint32_t x = 0; x < p; ++x) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((static_cast<std::uint64_t>(xi) * x) % p) / p;
      acc += f[x] * std::polar(1.0, angle);
    }
    out[xi] = acc;
  }
  return out;
}

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
  const std::uint32_t p = f.p();
  DenseFunction out(f.field());
  for (std::uint32_t y = 0; y < p; ++y) {
    for (std::uint32_t z = 0; z < p; ++z) out[(y + z) % p] += f[y] * g[z];
  }
  return out;
}

std::int64_t additive_energy(const FpSet& a, const FpSet& b) {
  const std::uint32_t p = a.p();
  const auto ea = a.elements();
  const auto eb = b.elements();
  std::int64_t count = 0;
  for (auto a1 : ea)
    for (auto a2 : ea)
      for (auto b1 : eb)
        for (auto b2 : eb) count += (a1 + b1) % p == (a2 + b2) % p ? 1 : 0;
  return count;
}

std::int64_t mult_energy(const FpSet& a, const FpSet& b) {
  const std::uint64_t p = a.p();
  const auto ea = a.elements();
  const auto eb = b.elements();
  std::int64_t count = 0;
  for (std::uint64_t a1 : ea)
    for (std::uint64_t a2 : ea)
      for (std::uint64_t b1 : eb)
        for (std::uint64_t b2 : eb) count += a1 * b1 % p == a2 * b2 % p ? 1 : 0;
  return count;
}

std::int64_t count_system(const FpSet& a, const FpSet& b) {
  // b1/a = b1'/a'  <=>  b1 a' = b1' a  (a, a' nonzero)
  const std::uint64_t p = a.p();
  const auto ea = a.elements();
  const auto eb = b.elements();
  std::int64_t count = 0;
  for (std::uint64_t x : ea)
    for (std::uint64_t y : ea)
      for (std::uint64_t b1 : eb)
        for (std::uint64_t b1p : eb) {
          if (b1 * y % p != b1p * x % p) continue;
          for (std::uint64_t b2 : eb)
            for (std::uint64_t b2p : eb) count += b2 * y % p == b2p * x % p ? 1 : 0;
        }
  return count;
}

std::int64_t count_dilate_eq(const FpSet& a, std::uint32_t xi) {
  const std::uint64_t p = a.p();
  const auto e = a.elements();
  std::int64_t count = 0;
  for (std::uint64_t a1 : e)
    for (std::uint64_t a2 : e) {
      const std::uint64_t lhs = xi * ((a1 + p - a2) % p) % p;
      for (std::uint64_t a3 : e)
        for (std::uint64_t a4 : e)
          for (std::uint64_t a5 : e)
            for (std::uint64_t a6 : e) count += (a3 + a4 + 2 * p - a5 - a6) % p == lhs ? 1 : 0;
    }
  return count;
}

std::int64_t count_skew_products(const FpSet& a, const FpSet& b) {
  const std::uint64_t p = a.p();
  const auto s = reference::sumset(a, a).elements();
  const auto ea = a.elements();
  const auto eb = b.elements();
  std::int64_t count = 0;
  for (std::uint64_t s1 : s)
    for (std::uint64_t a1 : ea)
      for (std::uint64_t b1 : eb) {
        const std::uint64_t lhs = (s1 + p - a1) % p * b1 % p;
        for (std::uint64_t s2 : s)
          for (std::uint64_t a2 : ea)
            for (std::uint64_t b2 : eb) count += (s2 + p - a2) % p * b2 % p == lhs ? 1 : 0;
      }
  return count;
}

namespace {

std::complex<double> chi_direct(const Character& chi, std::uint32_t x) {
  if (x == 0) return {};
  const std::uint32_t n = chi.p() - 1;
  const std::uint64_t t = chi.field()->dlog(x);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t * chi.k() % n) / n);
}

}  // namespace

std::complex<double> character_sum(const Character& chi, const FpSet& a, const FpSet& b) {
  const std::uint32_t p = a.p();
  std::complex<double> acc{};
  a.for_each([&](std::uint32_t x) { b.for_each([&](std::uint32_t y) { acc += chi_direct(chi, (x + y) % p); }); });
  return acc;
}

double moment_lhs(const Character& chi, const FpSet& interval, std::uint32_t r) {
  const std::uint32_t p = chi.p();
  const auto elems = interval.elements();
  double total = 0.0;
  for (std::uint32_t u1 = 0; u1 < p; ++u1) {
    for (std::uint32_t u2 = 0; u2 < p; ++u2) {
      std::complex<double> s{};
      for (auto t : elems) s += chi_direct(chi, (u1 + t) % p) * std::conj(chi_direct(chi, (u2 + t) % p));
      total += std::pow(std::abs(s), 2.0 * r);
    }
  }
  return total;
}

std::int64_t count_incidences(const PointSet3& pts, const PlaneSet& planes) {
  std::int64_t count = 0;
  for (const auto& q : pts.points())
    for (const auto& pl : planes.planes()) count += on_plane(pl, q, pts.p()) ? 1 : 0;
  return count;
}

std::int64_t max_collinear(const PointSet3& pts) {
  const auto& q = pts.points();
  const std::uint64_t p = pts.p();
  if (q.empty()) return 0;
  std::int64_t best = 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      const std::uint64_t d[3] = {(q[j].x + p - q[i].x) % p, (q[j].y + p - q[i].y) % p, (q[j].z + p - q[i].z) % p};
      std::int64_t on_line = 0;
      for (const auto& r : q) {
        const std::uint64_t e[3] = {(r.x + p - q[i].x) % p, (r.y + p - q[i].y) % p, (r.z + p - q[i].z) % p};
        // e parallel to d iff the cross product vanishes.
        const bool collinear = (e[1] * d[2] + p * p - e[2] * d[1]) % p == 0 &&
                               (e[2] * d[0] + p * p - e[0] * d[2]) % p == 0 &&
                               (e[0] * d[1] + p * p - e[1] * d[0]) % p == 0;
        on_line += collinear ? 1 : 0;
      }
      best = std::max(best, on_line);
    }
  }
  return best;
}

FpSet extract_z(const FpSet& x, std::int64_t d, std::int64_t l) {
  const std::uint64_t p = x.p();
  const FpSet diff = reference::sumset(x, x.negated());
  BitVector bits(x.p());
  for (std::uint64_t z = 0; z < p; ++z) {
    bool ok = true;
    std::uint64_t scaled = z;
    for (std::int64_t j = 0; j < l && ok; ++j) {
      ok = diff.contains(static_cast<std::uint32_t>(scaled));
      scaled = scaled * static_cast<std::uint64_t>(d) % p;
    }
    if (ok) bits.set(z);
  }
  return FpSet(x.field(), std::move(bits));
}

}  // namespace fplab::reference
