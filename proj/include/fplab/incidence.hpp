#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fplab/field.hpp"
#include "fplab/report.hpp"
#include "fplab/setalg.hpp"

namespace fplab {

struct Point3 {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  friend auto operator<=>(const Point3&, const Point3&) = default;
};

/// Plane a x + b y + c z = d with (a, b, c) != 0, scaled so the first
/// nonzero of (a, b, c) is 1.
struct Plane {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t d = 0;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

/// Canonical form of a x + b y + c z = d; throws BadInput if (a, b, c) = 0.
Plane canonical_plane(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

inline bool on_plane(const Plane& pl, const Point3& q, std::uint32_t p) {
  const std::uint64_t s = (static_cast<std::uint64_t>(pl.a) * q.x + static_cast<std::uint64_t>(pl.b) * q.y +
                           static_cast<std::uint64_t>(pl.c) * q.z) % p;
  return s == pl.d;
}

/// Distinct points of F_p^3.
class PointSet3 {
 public:
  /// Throws BadInput on a duplicate or out-of-range coordinate.
  PointSet3(FieldRef field, std::vector<Point3> points);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  const std::vector<Point3>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  FieldRef field_;
  std::vector<Point3> points_;
};

/// Distinct planes of F_p^3 in canonical form.
class PlaneSet {
 public:
  /// Planes are canonicalized; duplicates after canonicalization are dropped.
  PlaneSet(FieldRef field, std::vector<Plane> planes);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  const std::vector<Plane>& planes() const noexcept { return planes_; }
  std::size_t size() const noexcept { return planes_.size(); }

 private:
  FieldRef field_;
  std::vector<Plane> planes_;
};

/// |{(q, pi) : q in pi}|. Planes are grouped by normal; each group costs one
/// pass over the points to histogram the values of the normal form.
std::int64_t count_incidences(const PointSet3& pts, const PlaneSet& planes);

/// Largest number of points of P on one line (1 for a single point).
std::int64_t max_collinear(const PointSet3& pts);

/// |I(P, Pi) - |P||Pi|/p| against |P|^{1/2}|Pi| + k|Pi|.
Report rudnev_gap(const PointSet3& pts, const PlaneSet& planes);

struct SkewConfiguration {
  PointSet3 points;  // (s, b', a' b') for s in A+A, a' in A, b' in B \ {0}
  PlaneSet planes;   // (x - a) b = s' y - z for a in A, b in B \ {0}, s' in A+A
};

/// Point and plane families whose incidences are exactly the solutions of
/// (s - a) b = (s' - a') b'. Zero is removed from B.
SkewConfiguration skew_configuration(const FpSet& a, const FpSet& b);

/// The points (s, b', a' b') alone, for collinearity checks.
PointSet3 skew_points(const FpSet& a, const FpSet& b);

/// q -> M q + v with M invertible over F_p.
struct AffineMap3 {
  std::array<std::array<std::uint32_t, 3>, 3> M{};
  std::array<std::uint32_t, 3> v{};
};

/// Inverse of a 3x3 matrix mod p; throws BadInput if singular.
std::array<std::array<std::uint32_t, 3>, 3> inverse_matrix(const std::array<std::array<std::uint32_t, 3>, 3>& m,
                                                          std::uint32_t p);
PointSet3 transform(const AffineMap3& map, const PointSet3& pts);
/// Image planes: a x + b y + c z = d becomes n' . q = d + n' . v with
/// n' = M^{-T} (a, b, c).
PlaneSet transform(const AffineMap3& map, const PlaneSet& planes);

}  // namespace fplab
