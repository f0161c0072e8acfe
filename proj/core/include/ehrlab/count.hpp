#pragma once

#include "ehrlab/polytope.hpp"

namespace ehrlab {

/// Exact |k . target  ∩ Z^n| for k >= 1.  Dilation scales facet offsets, so
/// the scan works on k-independent integer inequality rows.  For a ball, a
/// lattice point is counted once if it lies in any piece.
///
/// jobs > 1 partitions the scan into leading-coordinate slices that are
/// counted concurrently; the result is identical for every partitioning.
Int count_lattice_points(const VPolytope& target, const Int& k, int jobs = 1);
Int count_lattice_points(const PolytopalBall& target, const Int& k, int jobs = 1);

}  // namespace ehrlab
