#pragma once

#include "ehrlab/polytope.hpp"

namespace ehrlab {

/// Exact volume of a full-dimensional polytope, computed by coning a
/// recursive facet triangulation from the first vertex and summing
/// |det| / d! simplex volumes.  Deliberately independent of the lattice
/// counting pipeline so the two can check each other.
Rational volume(const VPolytope& p);

}  // namespace ehrlab
