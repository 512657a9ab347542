#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nctx/errors.hpp"
#include "nctx/rational.hpp"

namespace nctx {

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

// Hypergraph of measurement events: vertices are events, hyperedges are
// measurements (normalized outcome sets). Immutable after construction.
class ContextualityScenario {
 public:
  // Validates: nonempty hyperedges, no dangling vertex, no duplicate vertex
  // ids or hyperedges, Sperner (no hyperedge strictly inside another).
  // Vertex order is the input order.
  static ContextualityScenario validate(std::vector<VertexId> vertices,
                                        std::vector<std::vector<VertexId>> hyperedges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return hyperedges_.size(); }
  std::size_t index_of(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }

 private:
  ContextualityScenario() = default;
  std::vector<VertexId> vertices_;
  std::vector<VertexSet> hyperedges_;
  std::map<VertexId, std::size_t> index_;
};

// Pairwise-exclusivity graph: {v,v'} is an edge iff the two events co-occur
// in some hyperedge of the source scenario.
struct OrthoGraph {
  std::vector<VertexId> vertices;
  std::set<std::pair<VertexId, VertexId>> edges;  // pairs stored (min,max)

  bool adjacent(const VertexId& a, const VertexId& b) const;
};

// Subgraph of an orthogonality graph carrying a Bell-KS expression:
// positive weight per vertex, edges restricted from the parent graph.
struct WeightedGraph {
  OrthoGraph graph;
  std::map<VertexId, Rational> weights;

  static WeightedGraph make(OrthoGraph g, std::map<VertexId, Rational> w);
};

// Companion source-events hypergraph Sigma_G for a measurement hypergraph
// Gamma_G: one source setting per hyperedge, each with one source event per
// vertex of Gamma_G, plus the distinguished two-outcome star setting.
struct SourceScenario {
  // source_hyperedges[i] lists the source-event ids for hyperedge i of the
  // paired Gamma_G, in its vertex order.
  std::vector<std::vector<VertexId>> source_hyperedges;
  std::vector<VertexId> star_edge;  // the two events of S_{e*}: s=0, s=1

  std::size_t event_count() const;
  std::size_t setting_count() const { return source_hyperedges.size() + 1; }
};

OrthoGraph orthogonality_graph(const ContextualityScenario& s);

// Exact list of all maximal cliques, each sorted by vertex id, the list
// sorted lexicographically. Throws TooLarge above 64 vertices.
std::vector<std::vector<VertexId>> maximal_cliques(const OrthoGraph& g);

struct SpeckerVerdict {
  bool holds = false;
  std::vector<VertexId> violating_clique;  // one maximal clique outside every hyperedge
};

// Structural Specker's principle: every maximal clique of O(Gamma) lies
// inside some hyperedge.
SpeckerVerdict structural_specker_check(const ContextualityScenario& s);

// Gamma': adds one no-detection vertex to every maximal clique of O(Gamma)
// that is not already a hyperedge. Identity (up to copy) when none exist.
ContextualityScenario specker_extension(const ContextualityScenario& s);

enum class VertexRole { Event, NoDetection };

struct GammaG {
  ContextualityScenario scenario;
  std::map<VertexId, VertexRole> roles;
};

// Gamma_G: promotes every maximal clique of G to a hyperedge and appends a
// fresh no-detection vertex to each.
GammaG build_gamma_g(const WeightedGraph& g);

SourceScenario build_sigma_g(const ContextualityScenario& gamma_g);

// Deterministic id for the no-detection vertex of clique c.
VertexId no_detection_id(const std::vector<VertexId>& clique);

}  // namespace nctx
