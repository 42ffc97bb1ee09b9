// Canonical JSON formats shared by the CLI and the test suites.
//
// Coloring file:  {"n": int, "k": int, "edges": [[u, v, c], ...]}
//   with u < v, every pair present exactly once, c in 1..k, all colors used.
// Witness file:   {"edges": [[u, v], ...]}
//
// Emission is deterministic: keys are sorted, edges are listed in
// lexicographic (u, v) order.

#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "polychrome/graph.hpp"

namespace polychrome {

nlohmann::json coloring_to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json subgraph_to_json(const Subgraph& h);
Subgraph subgraph_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& verdict);

nlohmann::json blocks_to_json(const BlockSequence& blocks);
BlockSequence blocks_from_json(const nlohmann::json& j);

}  // namespace polychrome
