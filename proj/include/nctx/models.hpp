#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nctx/polytope.hpp"
#include "nctx/scenario.hpp"

namespace nctx {

// Exact probability assignment to the vertices of a scenario: p(v) >= 0 and
// unit sum on every hyperedge.
struct ProbModel {
  std::map<VertexId, Rational> probabilities;

  const Rational& at(const VertexId& v) const { return probabilities.at(v); }
  bool deterministic() const;
};

enum class ModelClassKind { C, CE1, G };

// Validates raw probabilities against the scenario. Throws
// NegativeProbability or NormalizationFailure (naming the hyperedge and the
// exact sum).
ProbModel check_model(const ContextualityScenario& s,
                      const std::map<VertexId, Rational>& raw);

// H-representation of the general-model polytope G(s): positivity plus unit
// hyperedge sums, coordinates in s.vertices() order.
HRepPolytope model_polytope(const ContextualityScenario& s);

ProbModel model_from_point(const ContextualityScenario& s, const RVector& x);
RVector point_from_model(const ContextualityScenario& s, const ProbModel& m);

struct ExtremalPartition {
  std::vector<ProbModel> deterministic;
  std::vector<ProbModel> indeterministic;
};

// Partitions the output of enumerate_vertices(model_polytope(s)) into
// deterministic (all coordinates 0/1) and indeterministic vertices.
ExtremalPartition classify_extremal(const ContextualityScenario& s,
                                    const std::vector<RVector>& vertices);

// All deterministic models by direct backtracking over hyperedges;
// independent of the polytope path (used as its cross-oracle).
std::vector<ProbModel> deterministic_models(const ContextualityScenario& s);

struct ClassicalityCertificate {
  bool classical = false;
  // Convex weights over deterministic_models(s), aligned by index; empty
  // when not classical (the LP system is infeasible).
  std::vector<Rational> weights;
};

ClassicalityCertificate in_classical(const ContextualityScenario& s,
                                     const ProbModel& m);

struct CE1Verdict {
  bool holds = false;
  std::vector<VertexId> violating_clique;  // empty when holds
};

// Consistent exclusivity: sum of p over every maximal clique of O(s) <= 1.
CE1Verdict in_ce1(const ContextualityScenario& s, const ProbModel& m);

struct ColourabilityVerdict {
  bool colourable = false;
  std::optional<ProbModel> witness;  // one deterministic model when true
};

ColourabilityVerdict ks_colourable(const ContextualityScenario& s);

// Bijection between CE1 models on s and general models on its Specker
// extension: forward fills each added no-detection vertex with the
// complement of its clique sum; back restricts to V(s).
ProbModel ce1_bijection_forward(const ContextualityScenario& s,
                                const ContextualityScenario& extension,
                                const ProbModel& m);
ProbModel ce1_bijection_back(const ContextualityScenario& s,
                             const ProbModel& m_ext);

// Exact optimum of sum_v w_v p(v) over the chosen class. C maximizes over
// deterministic models (EmptyClass when there are none); CE1/G are LPs.
Rational max_expression(const ContextualityScenario& s,
                        const std::map<VertexId, Rational>& weights,
                        ModelClassKind klass);

}  // namespace nctx
