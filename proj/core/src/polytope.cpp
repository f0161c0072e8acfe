#include "ehrlab/polytope.hpp"

#include <algorithm>
#include <cassert>

#include "ehrlab/lp.hpp"

namespace ehrlab {

namespace {

int affine_dim(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  Mat diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t j = 1; j < pts.size(); ++j) {
    Vec d(pts[j].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[j][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

void validate_points(int ambient_dim, const std::vector<Point>& points) {
  if (ambient_dim < 0) throw DimensionError("ambient dimension must be nonnegative");
  if (points.empty()) throw DimensionError("a polytope needs at least one point");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != ambient_dim) {
      throw DimensionError("point length " + std::to_string(p.size()) +
                           " does not match ambient dimension " + std::to_string(ambient_dim));
    }
  }
}

std::vector<Point> sorted_unique(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<Int> primitive_integer(const Vec& v) {
  Int scale = 1;
  for (const auto& q : v) scale = boost::multiprecision::lcm(scale, denom(q));
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& q : v) {
    Int e = numer(q) * (scale / denom(q));
    g = boost::multiprecision::gcd(g, e);
    out.push_back(std::move(e));
  }
  if (g > 1) {
    for (auto& e : out) e /= g;
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Rational dot(const std::vector<Int>& a, const Point& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * x[i];
  return acc;
}

bool ineq_less(const HRep::Inequality& a, const HRep::Inequality& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

// Facet enumeration by scanning hyperplanes spanned by affinely independent
// n-subsets of the vertex set.  Vertex counts stay small here, so the
// exhaustive exact scan is the robust choice.
HRep compute_hrep(const std::vector<Point>& verts, int n) {
  HRep rep;
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> idx(nn);
  for (std::size_t i = 0; i < nn; ++i) idx[i] = i;
  do {
    Mat diffs;
    diffs.reserve(nn - 1);
    for (std::size_t j = 1; j < nn; ++j) {
      Vec d(nn);
      for (std::size_t c = 0; c < nn; ++c) d[c] = verts[idx[j]][c] - verts[idx[0]][c];
      diffs.push_back(std::move(d));
    }
    auto kernel = nullspace(std::move(diffs), nn);
    if (kernel.size() != 1) continue;  // the subset does not span a hyperplane

    std::vector<Int> normal = primitive_integer(kernel[0]);
    Rational offset = dot(normal, verts[idx[0]]);
    bool above = false, below = false;
    for (const auto& v : verts) {
      const Rational s = dot(normal, v) - offset;
      if (s > 0) above = true;
      if (s < 0) below = true;
      if (above && below) break;
    }
    if (above == below) continue;  // mixed sides, or everything tight
    if (above) {
      for (auto& e : normal) e = -e;
      offset = -offset;
    }
    rep.inequalities.push_back({std::move(normal), std::move(offset)});
  } while (next_combination(idx, verts.size()));

  std::sort(rep.inequalities.begin(), rep.inequalities.end(), ineq_less);
  rep.inequalities.erase(std::unique(rep.inequalities.begin(), rep.inequalities.end()),
                         rep.inequalities.end());
  return rep;
}

}  // namespace

bool HRep::satisfied(const Point& x) const {
  for (const auto& ineq : inequalities) {
    if (dot(ineq.normal, x) > ineq.offset) return false;
  }
  return true;
}

bool LatticeBox::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return true;
  }
  return false;
}

VPolytope VPolytope::from_points(int ambient_dim, std::vector<Point> points) {
  validate_points(ambient_dim, points);
  auto pts = sorted_unique(std::move(points));
  // A point is dropped iff it is a convex combination of the others; dropping
  // such a point never changes the hull, so one pass removes exactly the
  // non-extreme points.
  std::size_t i = 0;
  while (pts.size() > 1 && i < pts.size()) {
    std::vector<Point> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (in_convex_hull(others, pts[i])) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  auto data = std::make_shared<Data>();
  data->dim = affine_dim(pts);
  data->vertices = std::move(pts);
  return VPolytope(ambient_dim, std::move(data));
}

VPolytope VPolytope::from_extreme_points(int ambient_dim, std::vector<Point> points) {
  validate_points(ambient_dim, points);
  auto data = std::make_shared<Data>();
  data->vertices = sorted_unique(std::move(points));
  data->dim = affine_dim(data->vertices);
  return VPolytope(ambient_dim, std::move(data));
}

VPolytope VPolytope::unit_point() { return from_extreme_points(0, {Point{}}); }

VPolytope VPolytope::translated(const Point& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw DimensionError("translation vector length does not match ambient dimension");
  }
  std::vector<Point> pts;
  pts.reserve(vertices().size());
  for (const auto& p : vertices()) {
    Point q(p);
    for (std::size_t c = 0; c < q.size(); ++c) q[c] += v[c];
    pts.push_back(std::move(q));
  }
  return from_extreme_points(ambient_, std::move(pts));
}

VPolytope VPolytope::pyramid() const {
  std::vector<Point> pts;
  pts.reserve(vertices().size() + 1);
  for (const auto& p : vertices()) {
    Point q(p);
    q.push_back(0);
    pts.push_back(std::move(q));
  }
  Point apex(static_cast<std::size_t>(ambient_) + 1, Rational(0));
  apex.back() = 1;
  pts.push_back(std::move(apex));
  return from_extreme_points(ambient_ + 1, std::move(pts));
}

VPolytope VPolytope::pyr_power(int i) const {
  if (i < 0) throw std::invalid_argument("pyramid power must be nonnegative");
  VPolytope out = *this;
  for (int j = 0; j < i; ++j) out = out.pyramid();
  return out;
}

const HRep& VPolytope::hrep() const {
  if (ambient_ == 0 || !full_dimensional()) {
    throw NotFullDimensionalError("facet representation requires a full-dimensional polytope (dim " +
                                  std::to_string(dim()) + " in R^" + std::to_string(ambient_) + ")");
  }
  std::lock_guard<std::mutex> lock(data_->memo_mutex);
  if (!data_->hrep) {
    data_->hrep = std::make_shared<const HRep>(compute_hrep(data_->vertices, ambient_));
  }
  return *data_->hrep;
}

std::optional<Point> VPolytope::AffineHull::coordinates(const Point& x) const {
  const std::size_t n = origin.size();
  Mat m(n, Vec(basis.size(), Rational(0)));
  Vec b(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < basis.size(); ++j) m[r][j] = basis[j][r];
    b[r] = x[r] - origin[r];
  }
  return solve_consistent(std::move(m), std::move(b));
}

const VPolytope::AffineHull& VPolytope::affine_hull() const {
  std::lock_guard<std::mutex> lock(data_->memo_mutex);
  if (!data_->hull) {
    auto hull = std::make_shared<AffineHull>();
    hull->origin = data_->vertices[0];
    // Greedy basis: keep the vertex differences that raise the rank.
    for (std::size_t j = 1; j < data_->vertices.size(); ++j) {
      Vec d(hull->origin.size());
      for (std::size_t c = 0; c < d.size(); ++c) d[c] = data_->vertices[j][c] - hull->origin[c];
      Mat probe = hull->basis;
      probe.push_back(d);
      if (rank(std::move(probe)) == static_cast<int>(hull->basis.size()) + 1) {
        hull->basis.push_back(std::move(d));
      }
    }
    std::vector<Point> mapped;
    mapped.reserve(data_->vertices.size());
    for (const auto& v : data_->vertices) {
      auto coords = hull->coordinates(v);
      assert(coords);
      mapped.push_back(std::move(*coords));
    }
    hull->mapped =
        std::make_shared<const VPolytope>(from_extreme_points(dim(), std::move(mapped)));
    data_->hull = std::move(hull);
  }
  return *data_->hull;
}

bool VPolytope::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != ambient_) {
    throw DimensionError("query point length does not match ambient dimension");
  }
  if (ambient_ == 0) return true;
  if (full_dimensional()) return hrep().satisfied(x);
  const AffineHull& hull = affine_hull();
  const auto t = hull.coordinates(x);
  if (!t) return false;
  return hull.mapped->contains(*t);
}

std::optional<Point> VPolytope::affine_coordinates(const Point& x) const {
  if (static_cast<int>(x.size()) != ambient_) {
    throw DimensionError("query point length does not match ambient dimension");
  }
  return affine_hull().coordinates(x);
}

const VPolytope& VPolytope::affine_form() const { return *affine_hull().mapped; }

Int VPolytope::denominator() const {
  Int l = 1;
  for (const auto& v : vertices()) {
    for (const auto& q : v) l = boost::multiprecision::lcm(l, denom(q));
  }
  return l;
}

LatticeBox VPolytope::bounding_box(const Int& k) const {
  LatticeBox box;
  const std::size_t n = static_cast<std::size_t>(ambient_);
  box.lo.resize(n);
  box.hi.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational mn = vertices()[0][c], mx = mn;
    for (const auto& v : vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    box.lo[c] = ceil_rat(Rational(k) * mn);
    box.hi[c] = floor_rat(Rational(k) * mx);
  }
  return box;
}

bool operator==(const VPolytope& a, const VPolytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}

VPolytope product(const VPolytope& p, const VPolytope& q) {
  std::vector<Point> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& u : p.vertices()) {
    for (const auto& w : q.vertices()) {
      Point r;
      r.reserve(u.size() + w.size());
      r.insert(r.end(), u.begin(), u.end());
      r.insert(r.end(), w.begin(), w.end());
      pts.push_back(std::move(r));
    }
  }
  return VPolytope::from_extreme_points(p.ambient_dim() + q.ambient_dim(), std::move(pts));
}

namespace {

// Hyperplane spanned by the affine hull of F inside R^n; requires
// dim F == n - 1.  The normal comes out primitive integer.
std::pair<std::vector<Int>, Rational> hull_hyperplane(const VPolytope& f) {
  const std::size_t n = static_cast<std::size_t>(f.ambient_dim());
  Mat diffs;
  const auto& verts = f.vertices();
  for (std::size_t j = 1; j < verts.size(); ++j) {
    Vec d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = verts[j][c] - verts[0][c];
    diffs.push_back(std::move(d));
  }
  auto kernel = nullspace(std::move(diffs), n);
  assert(kernel.size() == 1);
  auto normal = primitive_integer(kernel[0]);
  Rational offset = dot(normal, verts[0]);
  return {std::move(normal), std::move(offset)};
}

}  // namespace

bool is_facet(const VPolytope& f, const VPolytope& p) {
  if (f.ambient_dim() != p.ambient_dim()) return false;
  if (f.dim() != p.dim() - 1) return false;

  if (!p.full_dimensional()) {
    // Re-pose the test inside the affine hull of P.
    std::vector<Point> mapped;
    mapped.reserve(f.vertices().size());
    for (const auto& v : f.vertices()) {
      auto t = p.affine_coordinates(v);
      if (!t) return false;  // F leaves the affine hull of P
      mapped.push_back(std::move(*t));
    }
    return is_facet(VPolytope::from_extreme_points(p.dim(), std::move(mapped)), p.affine_form());
  }

  auto [normal, offset] = hull_hyperplane(f);
  bool above = false, below = false;
  std::vector<const Point*> tight;
  for (const auto& v : p.vertices()) {
    const Rational s = dot(normal, v) - offset;
    if (s > 0) {
      above = true;
    } else if (s < 0) {
      below = true;
    } else {
      tight.push_back(&v);
    }
    if (above && below) return false;  // aff(F) does not support P
  }
  for (const Point* v : tight) {
    if (!f.contains(*v)) return false;
  }
  return true;
}

bool interiors_disjoint(const VPolytope& p, const VPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("interiors_disjoint: ambient dimensions differ");
  }
  const std::size_t n = static_cast<std::size_t>(p.ambient_dim());
  const HRep& hp = p.hrep();
  const HRep& hq = q.hrep();

  // max eps  s.t.  a.(x+ - x-) + eps <= c  over both facet systems, with
  // eps = u - w free.  Interiors intersect iff the optimum is positive.
  Mat a;
  Vec b;
  for (const HRep* rep : {&hp, &hq}) {
    for (const auto& ineq : rep->inequalities) {
      Vec row(2 * n + 2, Rational(0));
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = Rational(ineq.normal[c]);
        row[n + c] = -Rational(ineq.normal[c]);
      }
      row[2 * n] = 1;
      row[2 * n + 1] = -1;
      a.push_back(std::move(row));
      b.push_back(ineq.offset);
    }
  }
  Vec c(2 * n + 2, Rational(0));
  c[2 * n] = 1;
  c[2 * n + 1] = -1;
  const auto res =
      solve_lp(std::move(a), std::move(b), std::vector<Rel>(b.size(), Rel::Le), std::move(c));
  if (res.status != LpStatus::Optimal) {
    throw Error("interiors_disjoint: slack maximization did not reach an optimum");
  }
  return res.objective <= 0;
}

PolytopalBall::PolytopalBall(int ambient_dim, std::vector<VPolytope> pieces)
    : ambient_(ambient_dim), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DimensionError("a polytopal ball needs at least one piece");
  if (ambient_ < 1) throw DimensionError("a polytopal ball needs ambient dimension >= 1");
  for (const auto& p : pieces_) {
    if (p.ambient_dim() != ambient_) {
      throw DimensionError("ball piece ambient dimension mismatch");
    }
    if (!p.full_dimensional()) {
      throw NotFullDimensionalError("every piece of a polytopal ball must be full-dimensional");
    }
  }
}

Int PolytopalBall::denominator() const {
  Int l = 1;
  for (const auto& p : pieces_) l = boost::multiprecision::lcm(l, p.denominator());
  return l;
}

LatticeBox PolytopalBall::bounding_box(const Int& k) const {
  LatticeBox box = pieces_[0].bounding_box(k);
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const LatticeBox other = pieces_[i].bounding_box(k);
    for (std::size_t c = 0; c < box.lo.size(); ++c) {
      box.lo[c] = std::min(box.lo[c], other.lo[c]);
      box.hi[c] = std::max(box.hi[c], other.hi[c]);
    }
  }
  return box;
}

}  // namespace ehrlab
