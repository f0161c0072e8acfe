#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehrlab/polytope.hpp"
#include "ehrlab/volume.hpp"

namespace ehrlab {

/// Node set for the moment-curve polytopes: a strictly increasing list of
/// integers.  A dimension-n build uses n+1 nodes.
struct CyclicConfig {
  std::vector<Int> nodes;

  CyclicConfig() = default;
  explicit CyclicConfig(std::vector<Int> nodes_);

  /// The canonical choice {0, 1, ..., n}.
  static CyclicConfig standard(int n);

  int max_index() const { return static_cast<int>(nodes.size()) - 1; }
  friend bool operator==(const CyclicConfig&, const CyclicConfig&) = default;
};

/// The closed segment [-1/p, 0] in R^1, p >= 1.
VPolytope segment(std::int64_t p);

/// The pentagon with vertices (+-q, 0), (+-(q-1), 1), (0, q/p) in R^2,
/// where q = p^2 - p + 1.  For p = 1 this degenerates to the triangle
/// conv{(+-1, 0), (0, 1)}.
VPolytope pentagon(std::int64_t p);

/// Hull of the moment-curve image {(t, t^2, ..., t^i) : t in nodes} in R^i;
/// index 0 gives the point of R^0.
VPolytope cyclic_polytope(const CyclicConfig& config, int i);

/// Volume of cyclic_polytope(config, i) from the triangulation/determinant
/// oracle; the index-0 polytope has volume 1 by convention.
Rational cyclic_volume(const CyclicConfig& config, int i);

// The glued-ball building blocks in R^n, 1 <= i <= n-1, shift k >= 1.
// left_summand lives in the halfspace x_{i+1} <= -k with its designated
// facet left_facet in the hyperplane x_{i+1} = -k; the right-hand pair
// mirrors this on x_{i+1} >= k.  The natural degenerations at i = 1 and
// i = n-1 fall out of the general formulas.
VPolytope left_summand(const CyclicConfig& config, int n, int i, std::int64_t p, std::int64_t k);
VPolytope left_facet(const CyclicConfig& config, int n, int i, std::int64_t k);
VPolytope right_summand(const CyclicConfig& config, int n, int i, std::int64_t p, std::int64_t k);
VPolytope right_facet(const CyclicConfig& config, int n, int i, std::int64_t p, std::int64_t k);

/// conv(left_facet ∪ right_facet): the integral middle piece between the
/// hyperplanes x_{i+1} = -k and x_{i+1} = k.
VPolytope middle_single(const CyclicConfig& config, int n, int i, std::int64_t p, std::int64_t k);

/// The n-dimensional ball whose Ehrhart coefficient of degree i has period p
/// and all other coefficients constant: a single simplex pyramid for i = 0,
/// and {left, middle, right} for i >= 1.
PolytopalBall build_qi(const CyclicConfig& config, int n, int i, std::int64_t p,
                       std::int64_t k = 1);

/// The degree-0 piece: the (n-1)-fold pyramid over [-1/p, 0], shifted by
/// -k e_1 (k = 0 gives the unshifted version used by build_qi).
VPolytope q0_piece(int n, std::int64_t p, std::int64_t k);
/// Its designated facet conv{0, e_2, ..., e_n} - k e_1.
VPolytope q0_facet(int n, std::int64_t k);

struct ConstructionParams {
  int n = 1;
  std::vector<std::int64_t> periods;  // p_0 .. p_{n-1}, all >= 1
  CyclicConfig cyclic;                // must hold n+1 nodes
  std::optional<std::vector<std::int64_t>> shifts;  // k_0 .. k_{n-1}, all >= 1
};

/// The designated facets Q'_0, L'_1, R'_1, ..., L'_{n-1}, R'_{n-1} built
/// with the given shifts (2n-1 polytopes).
std::vector<VPolytope> designated_facets(const ConstructionParams& params,
                                         const std::vector<std::int64_t>& shifts);

/// conv of the union of all designated facets.
VPolytope middle_glued(const ConstructionParams& params,
                       const std::vector<std::int64_t>& shifts);

/// True iff every designated facet is a facet of middle_glued.
bool shifts_admissible(const ConstructionParams& params,
                       const std::vector<std::int64_t>& shifts);

/// Searches for shift parameters making every designated facet a facet of
/// the glued middle polytope: uniform tuples K = 1, 2, 4, ... up to 2^12,
/// then a coordinate-wise downward refinement.  Deterministic; throws
/// ShiftSearchError with the last tuple tried when the budget is exhausted.
/// params.shifts must be empty.
std::vector<std::int64_t> choose_shifts(const ConstructionParams& params);

struct QStarBuild {
  PolytopalBall ball;
  std::vector<std::int64_t> shifts;
};

/// Assembles the full ball {Q_0, M, L_1, R_1, ..., L_{n-1}, R_{n-1}} whose
/// Ehrhart coefficient of degree i has period params.periods[i].  Uses
/// params.shifts when present (validating them, FacetValidationError on
/// failure) and otherwise runs choose_shifts.
QStarBuild build_qstar(const ConstructionParams& params);

}  // namespace ehrlab
