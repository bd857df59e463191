#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "rzlmi/construct.hpp"
#include "rzlmi/rzcheck.hpp"
#include "rzlmi/topology.hpp"

namespace rzlmi {

using Json = nlohmann::ordered_json;

Json direction_json(const Direction& v);
Json point_json(const Point& x);
Json matrix_json(const Matrix& m);

Json verdict_json(const RZVerdict& v);
Json rigidity_json(const RigidityReport& r);
Json profile_json(const OvalProfile& p);
Json verification_json(const Verification& v);
/// {method, residual, constant, coordinate_change, ...}
Json representation_json(const RepresentationResult& r);
Json boundary_json(const BoundaryTrace& t);

/// Columns angle, mu_minus, mu_plus, x, y; one row per boundary point, mu as a Euclidean distance.
std::string boundary_csv(const BoundaryTrace& t);
/// Standalone SVG: region boundary as a polyline plus the curve samples as dots.
std::string boundary_svg(const BoundaryTrace& t);

}  // namespace rzlmi
