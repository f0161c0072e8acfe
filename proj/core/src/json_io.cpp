#include "ehrlab/json_io.hpp"

#include <cctype>

#include "ehrlab/errors.hpp"

namespace ehrlab {

std::string rational_to_string(const Rational& q) {
  return numer(q).str() + "/" + denom(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int int_from_string(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("malformed integer '" + std::string(s) + "'");
  return Int(std::string(s));
}

}  // namespace

Rational rational_from_string(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(int_from_string(s));
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!all_digits(den)) throw ParseError("malformed rational '" + std::string(s) + "'");
  const Int d = int_from_string(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(int_from_string(num), d);
}

namespace {

Rational rational_field(const nlohmann::json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return rational_from_string(j.get<std::string>());
}

}  // namespace

nlohmann::json to_json(const QuasiPolynomial& qp) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : qp.coefficients()) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : c.values()) values.push_back(rational_to_string(v));
    coeffs.push_back({{"period", c.period()}, {"values", std::move(values)}});
  }
  return {{"degree", qp.degree()}, {"coefficients", std::move(coeffs)}};
}

QuasiPolynomial quasipoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients")) {
    throw ParseError("quasi-polynomial JSON needs 'degree' and 'coefficients'");
  }
  if (!j["degree"].is_number_integer() || !j["coefficients"].is_array()) {
    throw ParseError("malformed quasi-polynomial JSON");
  }
  const auto& coeffs = j["coefficients"];
  if (coeffs.size() != static_cast<std::size_t>(j["degree"].get<int>()) + 1) {
    throw ParseError("quasi-polynomial degree does not match its coefficient count");
  }
  std::vector<PeriodicFunction> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.is_object() || !c.contains("period") || !c.contains("values") ||
        !c["values"].is_array() || c["values"].empty()) {
      throw ParseError("malformed coefficient entry in quasi-polynomial JSON");
    }
    std::vector<Rational> values;
    values.reserve(c["values"].size());
    for (const auto& v : c["values"]) values.push_back(rational_field(v));
    if (c["period"].get<std::int64_t>() != static_cast<std::int64_t>(values.size())) {
      throw ParseError("coefficient period does not match its value count");
    }
    out.emplace_back(std::move(values));
  }
  return QuasiPolynomial(std::move(out));
}

nlohmann::json to_json(const VPolytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : v) row.push_back(rational_to_string(c));
    verts.push_back(std::move(row));
  }
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

VPolytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices") ||
      !j["ambient_dim"].is_number_integer() || !j["vertices"].is_array()) {
    throw ParseError("polytope JSON needs 'ambient_dim' and 'vertices'");
  }
  const int n = j["ambient_dim"].get<int>();
  std::vector<Point> pts;
  pts.reserve(j["vertices"].size());
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw ParseError("polytope vertex must be an array");
    Point p;
    p.reserve(row.size());
    for (const auto& c : row) p.push_back(rational_field(c));
    pts.push_back(std::move(p));
  }
  try {
    return VPolytope::from_points(n, std::move(pts));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid polytope: ") + e.what());
  }
}

nlohmann::json to_json(const PolytopalBall& b) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : b.pieces()) pieces.push_back(to_json(p));
  return {{"ambient_dim", b.ambient_dim()}, {"pieces", std::move(pieces)}};
}

PolytopalBall ball_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("pieces") ||
      !j["ambient_dim"].is_number_integer() || !j["pieces"].is_array() || j["pieces"].empty()) {
    throw ParseError("ball JSON needs 'ambient_dim' and a nonempty 'pieces' array");
  }
  std::vector<VPolytope> pieces;
  pieces.reserve(j["pieces"].size());
  for (const auto& p : j["pieces"]) pieces.push_back(polytope_from_json(p));
  try {
    return PolytopalBall(j["ambient_dim"].get<int>(), std::move(pieces));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid ball: ") + e.what());
  }
}

GeometryTarget target_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("pieces")) return ball_from_json(j);
  if (j.is_object() && j.contains("vertices")) return polytope_from_json(j);
  throw ParseError("geometry JSON needs either 'vertices' or 'pieces'");
}

}  // namespace ehrlab
