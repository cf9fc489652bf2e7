#pragma once

#include <string>

#include <json.hpp>

#include "surfmap/map.hpp"

namespace surfmap {

/// Schema: {"darts": N, "alpha": [...], "sigma": [...],
///          "labels": {"<edge>": {"component": c, "kind": "curve"}},
///          "marked": [dart...], "orientation": {"<component>": dart}}
/// where <edge> is the smaller dart id of the edge.
nlohmann::json map_to_json(const CombinatorialMap& m);

/// Throws std::invalid_argument on malformed or structurally inconsistent
/// input.
CombinatorialMap map_from_json(const nlohmann::json& j);

/// Graphviz rendering: one node per vertex, one edge per map edge, labeled by
/// component and kind.
std::string map_to_dot(const CombinatorialMap& m);

}  // namespace surfmap
