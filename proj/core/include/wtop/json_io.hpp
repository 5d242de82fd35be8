#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>

#include "wtop/chain_wspace.hpp"
#include "wtop/delta_space.hpp"
#include "wtop/holed_plane.hpp"
#include "wtop/paths.hpp"
#include "wtop/quadratic.hpp"
#include "wtop/rotation.hpp"
#include "wtop/weighted_category.hpp"

namespace wtop::io {

using json = nlohmann::json;

json to_json(const ExtWeight& w);
ExtWeight weight_from_json(const json& j);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

json to_json(const FiniteDeltaSpace& space);
FiniteDeltaSpace delta_space_from_json(const json& j);

json to_json(const PointRelation& rel);
PointRelation relation_from_json(const json& j);

json to_json(const PLPath& path);
PLPath path_from_json(const json& j);

json to_json(const ChainPath& chain);
ChainPath chain_path_from_json(const json& j);

json to_json(const FiniteWeightedCategory& cat);
FiniteWeightedCategory wcat_from_json(const json& j);

json to_json(const HoledPlane& plane);
HoledPlane plane_from_json(const json& j);

json to_json(const ChainWSpace& space);
ChainWSpace wspace_from_json(const json& j);

json to_json(const QuadraticIrrational& theta);
QuadraticIrrational theta_from_json(const json& j);

/// Loads and parses a JSON file; wraps stream and syntax errors as ParseError.
json load_json_file(const std::string& path);

}  // namespace wtop::io
