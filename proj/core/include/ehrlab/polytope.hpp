#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ehrlab/errors.hpp"
#include "ehrlab/linalg.hpp"
#include "ehrlab/rational.hpp"

namespace ehrlab {

/// Facet description of a full-dimensional polytope: x is inside iff
/// normal . x <= offset for every inequality.  Normals are primitive
/// integer vectors; offsets are exact rationals.
struct HRep {
  struct Inequality {
    std::vector<Int> normal;
    Rational offset;
    friend bool operator==(const Inequality&, const Inequality&) = default;
  };
  std::vector<Inequality> inequalities;

  bool satisfied(const Point& x) const;
};

/// Integer ranges [lo_i, hi_i] covering the lattice points of a dilate.
struct LatticeBox {
  std::vector<Int> lo, hi;
  bool empty() const;
};

/// A convex rational polytope stored by its extreme points.  Instances are
/// immutable values; copies are cheap (shared storage) and the derived facet
/// representation is memoized behind a lock, transparently to callers.
///
/// The zero-dimensional space R^0 is admitted: its only polytope is the
/// single empty-coordinate point, which acts as the identity for product().
class VPolytope {
 public:
  /// General constructor: deduplicates and prunes non-extreme points
  /// (convex-combination LP test).  Throws DimensionError on an empty or
  /// ragged point list.
  static VPolytope from_points(int ambient_dim, std::vector<Point> points);

  /// Trusted constructor for point sets already known to be extreme
  /// (products, pyramids, translates of extreme sets).  Deduplicates only.
  static VPolytope from_extreme_points(int ambient_dim, std::vector<Point> points);

  /// The point of R^0.
  static VPolytope unit_point();

  int ambient_dim() const { return ambient_; }
  const std::vector<Point>& vertices() const { return data_->vertices; }
  /// Affine dimension (0 for a point).
  int dim() const { return data_->dim; }
  bool full_dimensional() const { return dim() == ambient_dim(); }

  VPolytope translated(const Point& v) const;
  VPolytope pyramid() const;
  VPolytope pyr_power(int i) const;

  /// Facet inequalities; requires full dimension in an ambient space of
  /// dimension >= 1 (throws NotFullDimensionalError otherwise).
  const HRep& hrep() const;

  /// Exact membership.  Full-dimensional polytopes test the facet system;
  /// lower-dimensional ones test membership in the affine hull and then the
  /// facet system inside that hull.
  bool contains(const Point& x) const;

  /// Coordinates of x in the memoized affine-hull basis, or nullopt when x
  /// lies outside the affine hull.
  std::optional<Point> affine_coordinates(const Point& x) const;

  /// The polytope re-expressed in its affine-hull coordinates: a
  /// full-dimensional copy living in R^dim().
  const VPolytope& affine_form() const;

  /// lcm of the denominators of all vertex coordinates.
  Int denominator() const;

  /// Per-coordinate integer ranges [ceil(k min), floor(k max)] covering
  /// the lattice points of the k-th dilate.
  LatticeBox bounding_box(const Int& k) const;

  /// Order-insensitive equality of vertex sets.
  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  struct AffineHull {
    Point origin;
    Mat basis;                       // rows span the hull directions
    std::shared_ptr<const VPolytope> mapped;  // vertices in hull coordinates
    std::optional<Point> coordinates(const Point& x) const;
  };

  struct Data {
    std::vector<Point> vertices;
    int dim = 0;
    mutable std::mutex memo_mutex;
    mutable std::shared_ptr<const HRep> hrep;
    mutable std::shared_ptr<const AffineHull> hull;
  };

  VPolytope(int ambient, std::shared_ptr<const Data> data)
      : ambient_(ambient), data_(std::move(data)) {}

  const AffineHull& affine_hull() const;

  int ambient_ = 0;
  std::shared_ptr<const Data> data_;
};

/// Cartesian product; P's coordinates come first.  Either factor may be the
/// R^0 point, which acts as the identity.
VPolytope product(const VPolytope& p, const VPolytope& q);

/// True iff dim(F) == dim(P) - 1, the affine hull of F supports P, and every
/// vertex of P lying on that hull belongs to F.
bool is_facet(const VPolytope& f, const VPolytope& p);

/// Exact emptiness test of int(P) ∩ int(Q) via slack maximization over the
/// combined facet systems.  Both polytopes must be full-dimensional.
bool interiors_disjoint(const VPolytope& p, const VPolytope& q);

/// A finite union of full-dimensional convex pieces in a common ambient
/// space; membership means membership in at least one piece.
class PolytopalBall {
 public:
  PolytopalBall(int ambient_dim, std::vector<VPolytope> pieces);

  int ambient_dim() const { return ambient_; }
  const std::vector<VPolytope>& pieces() const { return pieces_; }

  Int denominator() const;
  LatticeBox bounding_box(const Int& k) const;

 private:
  int ambient_ = 0;
  std::vector<VPolytope> pieces_;
};

}  // namespace ehrlab
