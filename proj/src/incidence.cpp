#include "fplab/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fplab {

Plane canonical_plane(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::uint32_t v[4] = {reduce(a, p), reduce(b, p), reduce(c, p), reduce(d, p)};
  int lead = 0;
  while (lead < 3 && v[lead] == 0) ++lead;
  if (lead == 3) throw Error(ErrorCode::BadInput, "plane normal (a, b, c) is zero");
  const auto inv = static_cast<std::uint32_t>(pow_mod(v[lead], p - 2, p));
  for (auto& x : v) x = mul_mod(x, inv, p);
  return {v[0], v[1], v[2], v[3]};
}

PointSet3::PointSet3(FieldRef field, std::vector<Point3> points) : field_(std::move(field)), points_(std::move(points)) {
  const std::uint32_t p = field_->p();
  for (const auto& q : points_) {
    if (q.x >= p || q.y >= p || q.z >= p) throw Error(ErrorCode::BadInput, "point coordinate outside [0, p)");
  }
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::BadInput, "duplicate point");
  }
}

PlaneSet::PlaneSet(FieldRef field, std::vector<Plane> planes) : field_(std::move(field)) {
  const std::uint32_t p = field_->p();
  for (auto& pl : planes) pl = canonical_plane(p, pl.a, pl.b, pl.c, pl.d);
  std::vector<Plane> sorted = planes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Keep first-occurrence order for stable output.
  std::vector<bool> taken(sorted.size(), false);
  for (const auto& pl : planes) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), pl) - sorted.begin());
    if (!taken[idx]) {
      taken[idx] = true;
      planes_.push_back(pl);
    }
  }
}

std::int64_t count_incidences(const PointSet3& pts, const PlaneSet& planes) {
  if (pts.p() != planes.p()) throw Error(ErrorCode::FieldMismatch, "points and planes over different fields");
  const std::uint32_t p = pts.p();
  std::vector<Plane> sorted = planes.planes();
  std::sort(sorted.begin(), sorted.end());
  // Group boundaries by normal (a, b, c).
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].a != sorted[i - 1].a || sorted[i].b != sorted[i - 1].b || sorted[i].c != sorted[i - 1].c) {
      starts.push_back(i);
    }
  }
  starts.push_back(sorted.size());
  const auto groups = static_cast<std::int64_t>(starts.size()) - 1;
  std::int64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::int64_t> hist(p);
#pragma omp for schedule(dynamic)
    for (std::int64_t g = 0; g < groups; ++g) {
      const Plane& normal = sorted[starts[static_cast<std::size_t>(g)]];
      std::fill(hist.begin(), hist.end(), 0);
      for (const auto& q : pts.points()) {
        const std::uint64_t v = (static_cast<std::uint64_t>(normal.a) * q.x + static_cast<std::uint64_t>(normal.b) * q.y +
                                 static_cast<std::uint64_t>(normal.c) * q.z) % p;
        ++hist[v];
      }
      for (std::size_t i = starts[static_cast<std::size_t>(g)]; i < starts[static_cast<std::size_t>(g) + 1]; ++i) {
        total += hist[sorted[i].d];
      }
    }
  }
  return total;
}

namespace {

std::array<std::uint32_t, 3> canonical_direction(const Point3& from, const Point3& to, std::uint32_t p) {
  std::array<std::uint32_t, 3> d = {sub_mod(to.x, from.x, p), sub_mod(to.y, from.y, p), sub_mod(to.z, from.z, p)};
  int lead = 0;
  while (lead < 3 && d[lead] == 0) ++lead;
  const auto inv = static_cast<std::uint32_t>(pow_mod(d[lead], p - 2, p));
  for (auto& x : d) x = mul_mod(x, inv, p);
  return d;
}

}  // namespace

std::int64_t max_collinear(const PointSet3& pts) {
  const auto& q = pts.points();
  const std::uint32_t p = pts.p();
  const auto n = static_cast<std::int64_t>(q.size());
  if (n == 0) return 0;
  std::int64_t best = 1;
  // Lines through q[i]: bucket the later points by direction. Each line is
  // seen from its lowest-index point, which sees all the others.
#pragma omp parallel reduction(max : best)
  {
    std::vector<std::array<std::uint32_t, 3>> dirs;
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      dirs.clear();
      for (std::int64_t j = i + 1; j < n; ++j) {
        dirs.push_back(canonical_direction(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)], p));
      }
      std::sort(dirs.begin(), dirs.end());
      for (std::size_t s = 0; s < dirs.size();) {
        std::size_t e = s;
        while (e < dirs.size() && dirs[e] == dirs[s]) ++e;
        best = std::max(best, static_cast<std::int64_t>(e - s) + 1);
        s = e;
      }
    }
  }
  return best;
}

Report rudnev_gap(const PointSet3& pts, const PlaneSet& planes) {
  const std::int64_t incidences = count_incidences(pts, planes);
  const std::int64_t k = max_collinear(pts);
  const double np = static_cast<double>(pts.size());
  const double nl = static_cast<double>(planes.size());
  const double expected = np * nl / pts.p();
  const double lhs = std::abs(static_cast<double>(incidences) - expected);
  const double rhs = std::sqrt(np) * nl + static_cast<double>(k) * nl;
  Report rep;
  rep.kind = "incidence";
  rep.input("p", static_cast<std::int64_t>(pts.p()));
  rep.quantity("points", static_cast<std::int64_t>(pts.size()))
      .quantity("planes", static_cast<std::int64_t>(planes.size()))
      .quantity("incidences", incidences)
      .quantity("expected", expected)
      .quantity("max_collinear", k)
      .quantity("lhs", lhs)
      .quantity("rhs", rhs)
      .quantity("ratio", rhs > 0 ? lhs / rhs : 0.0);
  const bool hypothesis = pts.size() <= planes.size();
  rep.flag("hypothesis_points_le_planes", hypothesis);
  if (!hypothesis) rep.note("warning: |P| > |Pi|, the bound's hypothesis fails");
  return rep;
}

PointSet3 skew_points(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.p();
  const auto sums = sumset(a, a).elements();
  const auto ea = a.elements();
  std::vector<Point3> pts;
  pts.reserve(sums.size() * ea.size() * b.size());
  for (auto s : sums) {
    b.for_each([&](std::uint32_t bb) {
      if (bb == 0) return;
      for (auto aa : ea) pts.push_back({s, bb, mul_mod(aa, bb, p)});
    });
  }
  return PointSet3(a.field(), std::move(pts));
}

SkewConfiguration skew_configuration(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.p();
  const auto sums = sumset(a, a).elements();
  std::vector<Plane> planes;
  a.for_each([&](std::uint32_t aa) {
    b.for_each([&](std::uint32_t bb) {
      if (bb == 0) return;
      // (x - a) b = s' y - z  <=>  b x - s' y + z = a b
      for (auto s : sums) {
        planes.push_back(canonical_plane(p, bb, -static_cast<std::int64_t>(s), 1, mul_mod(aa, bb, p)));
      }
    });
  });
  return {skew_points(a, b), PlaneSet(a.field(), std::move(planes))};
}

std::array<std::array<std::uint32_t, 3>, 3> inverse_matrix(const std::array<std::array<std::uint32_t, 3>, 3>& m,
                                                          std::uint32_t p) {
  auto cof = [&](int r, int c) {
    const int r1 = (r + 1) % 3;
    const int r2 = (r + 2) % 3;
    const int c1 = (c + 1) % 3;
    const int c2 = (c + 2) % 3;
    return sub_mod(mul_mod(m[r1][c1], m[r2][c2], p), mul_mod(m[r1][c2], m[r2][c1], p), p);
  };
  std::uint32_t det = 0;
  for (int c = 0; c < 3; ++c) det = add_mod(det, mul_mod(m[0][c], cof(0, c), p), p);
  if (det == 0) throw Error(ErrorCode::BadInput, "singular matrix");
  const auto inv_det = static_cast<std::uint32_t>(pow_mod(det, p - 2, p));
  std::array<std::array<std::uint32_t, 3>, 3> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = mul_mod(cof(c, r), inv_det, p);
  return out;
}

PointSet3 transform(const AffineMap3& map, const PointSet3& pts) {
  const std::uint32_t p = pts.p();
  std::vector<Point3> out;
  out.reserve(pts.size());
  for (const auto& q : pts.points()) {
    std::uint32_t r[3];
    for (int i = 0; i < 3; ++i) {
      const std::uint64_t s = static_cast<std::uint64_t>(map.M[i][0]) * q.x + static_cast<std::uint64_t>(map.M[i][1]) * q.y +
                              static_cast<std::uint64_t>(map.M[i][2]) * q.z + map.v[i];
      r[i] = static_cast<std::uint32_t>(s % p);
    }
    out.push_back({r[0], r[1], r[2]});
  }
  return PointSet3(pts.field(), std::move(out));
}

PlaneSet transform(const AffineMap3& map, const PlaneSet& planes) {
  const std::uint32_t p = planes.p();
  const auto inv = inverse_matrix(map.M, p);
  std::vector<Plane> out;
  out.reserve(planes.size());
  for (const auto& pl : planes.planes()) {
    const std::uint32_t n[3] = {pl.a, pl.b, pl.c};
    std::uint32_t np[3];
    for (int j = 0; j < 3; ++j) {
      // (M^{-T} n)_j = sum_i inv[i][j] n_i
      std::uint64_t s = 0;
      for (int i = 0; i < 3; ++i) s += static_cast<std::uint64_t>(inv[i][j]) * n[i];
      np[j] = static_cast<std::uint32_t>(s % p);
    }
    std::uint64_t d = pl.d;
    for (int j = 0; j < 3; ++j) d += static_cast<std::uint64_t>(np[j]) * map.v[j];
    out.push_back({np[0], np[1], np[2], static_cast<std::uint32_t>(d % p)});
  }
  return PlaneSet(planes.field(), std::move(out));
}

}  // namespace fplab
