#pragma once

#include <string>

#include "nctx/models.hpp"
#include "nctx/scenario.hpp"

namespace nctx {

// Scenario JSON: {"vertices": [...], "hyperedges": [[...], ...]}.
ContextualityScenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const ContextualityScenario& s);

// Weighted-graph JSON adds "weights": {"id": "p/q" | decimal, ...}; the
// graph is the orthogonality graph of the scenario restricted to the
// weighted vertices.
WeightedGraph weighted_graph_from_json(const std::string& text);

// Model JSON: {"scenario": "<name-or-path>", "probabilities": {...}}.
struct ModelFile {
  std::string scenario_ref;
  std::map<VertexId, Rational> probabilities;
};
ModelFile model_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace nctx
