#ifndef MORSECONF_JSON_IO_HPP
#define MORSECONF_JSON_IO_HPP

#include <json.hpp>

#include "morseconf/config_cell.hpp"
#include "morseconf/counting.hpp"
#include "morseconf/gradient_field.hpp"
#include "morseconf/homology.hpp"
#include "morseconf/invariants.hpp"
#include "morseconf/morse_graph.hpp"

namespace morseconf {

/// Cell wire format: {"entries":[{"v":3},{"e":[0,1]}, ...]}.
nlohmann::json cell_to_json(const ConfigCell& cell);
ConfigCell cell_from_json(const nlohmann::json& j);

nlohmann::json morse_graph_to_json(const MorseGraph& graph);
MorseGraph morse_graph_from_json(const nlohmann::json& j);

nlohmann::json classification_report(const PlaneTree& tree, int n,
                                     long long budget = 1000000);
nlohmann::json census_to_json(const CensusTable& table);
nlohmann::json homology_to_json(const HomologyReport& rep);
nlohmann::json invariants_to_json(const InvariantReport& rep);

}  // namespace morseconf

#endif
