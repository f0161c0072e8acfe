#include "ehrlab/volume.hpp"

#include <cassert>

namespace ehrlab {

namespace {

Rational dot(const std::vector<Int>& a, const Point& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * x[i];
  return acc;
}

// Re-expresses pts in coordinates of their own affine hull, preserving order.
std::vector<Point> to_hull_coords(const std::vector<Point>& pts) {
  const Point& origin = pts[0];
  Mat basis;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    Vec d(origin.size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[j][c] - origin[c];
    Mat probe = basis;
    probe.push_back(d);
    if (rank(std::move(probe)) == static_cast<int>(basis.size()) + 1) basis.push_back(std::move(d));
  }
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    Mat m(origin.size(), Vec(basis.size(), Rational(0)));
    Vec b(origin.size());
    for (std::size_t r = 0; r < origin.size(); ++r) {
      for (std::size_t j = 0; j < basis.size(); ++j) m[r][j] = basis[j][r];
      b[r] = p[r] - origin[r];
    }
    auto coords = solve_consistent(std::move(m), std::move(b));
    assert(coords);
    out.push_back(std::move(*coords));
  }
  return out;
}

// Triangulates the full-dimensional polytope conv(pts) in R^d by coning a
// recursive facet triangulation from pts[0].  Returns index lists into pts;
// the order of pts is preserved throughout, so indices stay meaningful.
std::vector<std::vector<std::size_t>> triangulate_pts(const std::vector<Point>& pts,
                                                      std::size_t d) {
  if (pts.size() == d + 1) {
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return {all};
  }

  const VPolytope poly = VPolytope::from_extreme_points(static_cast<int>(d), pts);
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& ineq : poly.hrep().inequalities) {
    if (dot(ineq.normal, pts[0]) == ineq.offset) continue;  // facet contains the apex
    std::vector<std::size_t> tight;
    std::vector<Point> facet_pts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(ineq.normal, pts[i]) == ineq.offset) {
        tight.push_back(i);
        facet_pts.push_back(pts[i]);
      }
    }
    const auto sub = triangulate_pts(to_hull_coords(facet_pts), d - 1);
    for (const auto& s : sub) {
      std::vector<std::size_t> lifted;
      lifted.reserve(s.size() + 1);
      lifted.push_back(0);
      for (auto j : s) lifted.push_back(tight[j]);
      simplices.push_back(std::move(lifted));
    }
  }
  return simplices;
}

}  // namespace

Rational volume(const VPolytope& p) {
  if (p.ambient_dim() == 0) return 1;
  if (!p.full_dimensional()) {
    throw NotFullDimensionalError("volume requires a full-dimensional polytope");
  }
  const std::size_t d = static_cast<std::size_t>(p.ambient_dim());
  Int factorial = 1;
  for (std::size_t i = 2; i <= d; ++i) factorial *= i;

  Rational total = 0;
  const auto& verts = p.vertices();
  for (const auto& simplex : triangulate_pts(verts, d)) {
    assert(simplex.size() == d + 1);
    Mat m(d, Vec(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        m[r][c] = verts[simplex[r + 1]][c] - verts[simplex[0]][c];
      }
    }
    Rational det = determinant(std::move(m));
    if (det < 0) det = -det;
    total += det / Rational(factorial);
  }
  return total;
}

}  // namespace ehrlab
