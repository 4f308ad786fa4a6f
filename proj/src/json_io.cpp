#include "braidkit/json_io.hpp"

namespace braidkit {

nlohmann::json to_json(const LeftNormalForm& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const SimpleElement& a : f.factors) factors.push_back(a.perm.images());
  return nlohmann::json{{"n", f.strands}, {"inf", f.inf}, {"factors", factors}};
}

nlohmann::json to_json(const SlidingCircuitGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const LeftNormalForm& v : g.vertices) vertices.push_back(to_json(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back(nlohmann::json{
        {"from", e.from}, {"to", e.to}, {"conjugator", e.conjugator.letters}});
  return nlohmann::json{{"base", g.base},
                        {"base_conjugator", g.base_conjugator.letters},
                        {"vertices", vertices},
                        {"edges", edges}};
}

nlohmann::json to_json(const CombingCoordinates& coords) {
  nlohmann::json levels = nlohmann::json::array();
  for (const FreeWord& level : coords.levels)
    levels.push_back(nlohmann::json{{"rank", level.rank}, {"word", level.letters}});
  return nlohmann::json{{"levels", levels}};
}

}  // namespace braidkit
