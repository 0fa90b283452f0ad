#pragma once

#include "json.hpp"

#include "gaplab/core_model.hpp"

namespace gaplab {

inline constexpr int kSchemaVersion = 1;

// {rat: "p/q", log2: "p/q"} plus a "log" object {"3": "p/q", ...} when logs of
// other primes are present.
nlohmann::json exact_const_to_json(const ExactConst& value);
ExactConst exact_const_from_json(const nlohmann::json& j);

nlohmann::json atlas_to_json(const RegionAtlas& atlas);
RegionAtlas atlas_from_json(const nlohmann::json& j);

}  // namespace gaplab
