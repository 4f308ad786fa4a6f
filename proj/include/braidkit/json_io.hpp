#pragma once

#include <json.hpp>

#include "braidkit/combing.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/normal_form.hpp"

namespace braidkit {

// Wire formats. Factors are 1-based permutation image tables, a_1 first.
nlohmann::json to_json(const LeftNormalForm& f);

// {"base": int, "base_conjugator": [letters], "vertices": [...], "edges": [...]}
nlohmann::json to_json(const SlidingCircuitGraph& g);

// {"levels": [{"rank": k-1, "word": [letters]}, ...]}, top level first.
nlohmann::json to_json(const CombingCoordinates& coords);

}  // namespace braidkit
