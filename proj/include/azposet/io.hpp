#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "azposet/poset.hpp"

namespace azposet {

/// {"name": str, "elements": [{"id": int, "rank": int, "label"?: str}], "covers": [[lo, hi], ...]}
nlohmann::json poset_to_json(const RankedPoset& P);
RankedPoset poset_from_json(const nlohmann::json& doc);

/// Hasse diagram with one `rank=same` subgraph per level, drawn bottom-up.
std::string poset_to_dot(const RankedPoset& P);

nlohmann::json family_to_json(const Family& F);
Family family_from_json(const nlohmann::json& doc);

}  // namespace azposet
