#pragma once

#include <map>
#include <string>
#include <vector>

#include "nctx/models.hpp"
#include "nctx/scenario.hpp"

namespace nctx {

struct IndependenceResult {
  Rational value;
  std::vector<VertexId> witness;  // one maximum-weight independent set
};

// Exact maximum-weight independent set (branch and bound with a greedy
// clique-cover bound). Guarded at 64 vertices.
IndependenceResult independence_number(const WeightedGraph& g);

// Lovasz theta of (G, w): maximize sum_ij sqrt(w_i w_j) X_ij subject to
// Tr X = 1, X_ij = 0 on edges of G, X PSD. Accurate to about 1e-5.
double lovasz_theta(const WeightedGraph& g);

struct PackingResult {
  Rational value;
  RVector point;  // optimal p, in g.graph.vertices order
};

// Fractional packing number: exact LP optimum of sum w_v p_v subject to
// p >= 0 and unit bounds on every maximal clique.
PackingResult fractional_packing(const WeightedGraph& g);

struct PredictabilityResult {
  Rational value;
  ProbModel achieving_vertex;  // lexicographically least maximizer
};

// Weighted max-predictability: max over indeterministic extremal models of
// sum_e q_e * max_{v in e} p(v). q is indexed by hyperedge order. Throws
// NoIndeterministicVertices when the scenario has none.
PredictabilityResult weighted_max_predictability(
    const ContextualityScenario& gamma_g, const RVector& q,
    const std::vector<ProbModel>& indeterministic);

PredictabilityResult weighted_max_predictability(
    const ContextualityScenario& gamma_g, const RVector& q);

struct OptimalQResult {
  RVector q;
  Rational beta;
};

// Minimax over q: the exact epigraph LP for min_q max_ind sum_e q_e zeta_e.
OptimalQResult optimal_q(const ContextualityScenario& gamma_g);

std::vector<ProbModel> indeterministic_vertices(
    const ContextualityScenario& gamma_g);

struct InvariantBundle {
  Rational alpha;
  double theta = 0.0;
  Rational alpha_star;
  Rational beta;
  RVector q_used;  // distribution over hyperedges of gamma_g
};

// Computes the full bundle for a weighted graph and its companion scenario.
InvariantBundle invariant_bundle(const WeightedGraph& g,
                                 const ContextualityScenario& gamma_g,
                                 const RVector& q);

}  // namespace nctx
