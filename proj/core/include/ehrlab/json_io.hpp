#pragma once

#include <nlohmann/json.hpp>

#include <variant>

#include "ehrlab/polytope.hpp"
#include "ehrlab/quasipoly.hpp"

namespace ehrlab {

// Wire formats.  Rationals travel as reduced "a/b" strings; plain integers
// "a" are accepted on input and emitted as "a/1".

nlohmann::json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasipoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VPolytope& p);
VPolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolytopalBall& b);
PolytopalBall ball_from_json(const nlohmann::json& j);

/// Loads either geometry ("vertices" => polytope, "pieces" => ball).
/// Unknown keys (e.g. provenance annotations) are ignored.
using GeometryTarget = std::variant<VPolytope, PolytopalBall>;
GeometryTarget target_from_json(const nlohmann::json& j);

}  // namespace ehrlab
