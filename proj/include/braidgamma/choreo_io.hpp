#pragma once

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "braidgamma/geom2d.hpp"
#include "braidgamma/geom3d.hpp"

namespace braidgamma::io {

using Json = nlohmann::json;
using AnyChoreography = std::variant<geom2d::Choreography, geom3d::Choreo3>;

/// {"n", "dim", "points": [["p/q", ...], ...], "moves": [{"point", "to"}], "loop"}.
/// Shape errors throw ValidationFailed; malformed rationals throw SyntaxError.
AnyChoreography choreography_from_json(const Json& j);
AnyChoreography load_choreography(const std::filesystem::path& path);

Json to_json(const geom2d::Choreography& ch);
Json to_json(const geom3d::Choreo3& ch);

/// Exact times as root coefficients plus an isolating interval.
Json to_json(const geom2d::Event& e);
Json to_json(const geom3d::Event3& e);

}  // namespace braidgamma::io
