#include "nctx/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "nctx/lp.hpp"
#include "nctx/sdp.hpp"

namespace nctx {

namespace {

// Adjacency as bitmasks over the vertex order of g.graph.vertices.
std::vector<std::uint64_t> adjacency_masks(const WeightedGraph& g) {
  const auto& vs = g.graph.vertices;
  if (vs.size() > 64)
    throw ValidationError("TooLarge", "graph exceeds guard of 64 vertices");
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
  std::vector<std::uint64_t> adj(vs.size(), 0);
  for (const auto& [a, b] : g.graph.edges) {
    adj[idx.at(a)] |= 1ull << idx.at(b);
    adj[idx.at(b)] |= 1ull << idx.at(a);
  }
  return adj;
}

}  // namespace

IndependenceResult independence_number(const WeightedGraph& g) {
  const auto& vs = g.graph.vertices;
  auto adj = adjacency_masks(g);
  const std::size_t n = vs.size();
  RVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = g.weights.at(vs[i]);

  Rational best = 0;
  std::uint64_t best_set = 0;

  // Branch and bound over the candidate mask; the bound greedily covers the
  // candidates by cliques (each clique contributes at most its max weight).
  auto bound = [&](std::uint64_t cand) {
    Rational b = 0;
    std::uint64_t rest = cand;
    while (rest) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctzll(rest));
      std::uint64_t clique = 1ull << v;
      std::uint64_t common = adj[v] & rest;
      Rational mx = w[v];
      while (common) {
        std::size_t u = static_cast<std::size_t>(__builtin_ctzll(common));
        clique |= 1ull << u;
        if (w[u] > mx) mx = w[u];
        common &= adj[u];
      }
      b += mx;
      rest &= ~clique;
    }
    return b;
  };

  auto rec = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen,
                 const Rational& weight) -> void {
    if (weight > best) {
      best = weight;
      best_set = chosen;
    }
    if (!cand) return;
    if (weight + bound(cand) <= best) return;
    std::size_t v = static_cast<std::size_t>(__builtin_ctzll(cand));
    // Include v.
    self(self, cand & ~(adj[v] | (1ull << v)), chosen | (1ull << v),
         weight + w[v]);
    // Exclude v.
    self(self, cand & ~(1ull << v), chosen, weight);
  };
  std::uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
  rec(rec, all, 0, 0);

  IndependenceResult res;
  res.value = best;
  for (std::size_t i = 0; i < n; ++i)
    if (best_set & (1ull << i)) res.witness.push_back(vs[i]);
  return res;
}

double lovasz_theta(const WeightedGraph& g) {
  const auto& vs = g.graph.vertices;
  const Eigen::Index n = static_cast<Eigen::Index>(vs.size());
  std::map<VertexId, Eigen::Index> idx;
  for (Eigen::Index i = 0; i < n; ++i) idx[vs[i]] = i;

  DenseSDP sdp;
  sdp.objective.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sdp.objective(i, j) = std::sqrt(to_double(g.weights.at(vs[i])) *
                                      to_double(g.weights.at(vs[j])));
  Eigen::MatrixXd trace = Eigen::MatrixXd::Identity(n, n);
  sdp.constraints.emplace_back(trace, 1.0);
  for (const auto& [a, b] : g.graph.edges) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e(idx.at(a), idx.at(b)) = e(idx.at(b), idx.at(a)) = 1.0;
    sdp.constraints.emplace_back(e, 0.0);
  }
  return sdp_solve(sdp).value;
}

PackingResult fractional_packing(const WeightedGraph& g) {
  const auto& vs = g.graph.vertices;
  const std::size_t n = vs.size();
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[vs[i]] = i;

  RationalLP lp;
  lp.num_vars = n;
  lp.objective.resize(n);
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = g.weights.at(vs[i]);
  for (const auto& c : maximal_cliques(g.graph)) {
    RVector row(n, 0);
    for (const auto& v : c) row[idx.at(v)] = 1;
    lp.le_lhs.push_back(std::move(row));
    lp.le_rhs.push_back(1);
  }
  lp.lower.assign(n, Rational(0));
  auto res = lp_solve(lp, LPSense::Max);
  if (res.status != LPStatus::Optimal)
    throw SolverError("Infeasible", "fractional packing LP failed");
  return {res.value, res.point};
}

std::vector<ProbModel> indeterministic_vertices(
    const ContextualityScenario& gamma_g) {
  auto verts = enumerate_vertices(model_polytope(gamma_g));
  return classify_extremal(gamma_g, verts).indeterministic;
}

namespace {

// zeta profile of a model: max_{v in e} p(v) per hyperedge.
RVector zeta_profile(const ContextualityScenario& s, const ProbModel& m) {
  RVector z;
  for (const auto& e : s.hyperedges()) {
    Rational mx = 0;
    for (const auto& v : e) mx = std::max(mx, m.probabilities.at(v));
    z.push_back(mx);
  }
  return z;
}

void check_distribution(const ContextualityScenario& s, const RVector& q) {
  if (q.size() != s.edge_count())
    throw ValidationError("DimensionMismatch",
                          "q must have one entry per hyperedge");
  Rational sum = 0;
  for (const auto& x : q) {
    if (x < 0) throw ValidationError("BadDistribution", "negative q entry");
    sum += x;
  }
  if (sum != 1)
    throw ValidationError("BadDistribution",
                          "q sums to " + to_string(sum) + ", expected 1");
}

}  // namespace

PredictabilityResult weighted_max_predictability(
    const ContextualityScenario& gamma_g, const RVector& q,
    const std::vector<ProbModel>& indeterministic) {
  check_distribution(gamma_g, q);
  if (indeterministic.empty())
    throw ValidationError("NoIndeterministicVertices",
                          "beta is undefined: no indeterministic extremal "
                          "models");
  Rational best;
  const ProbModel* arg = nullptr;
  for (const auto& m : indeterministic) {
    RVector z = zeta_profile(gamma_g, m);
    Rational val = 0;
    for (std::size_t e = 0; e < q.size(); ++e) val += q[e] * z[e];
    if (!arg || val > best ||
        (val == best &&
         point_from_model(gamma_g, m) < point_from_model(gamma_g, *arg))) {
      best = val;
      arg = &m;
    }
  }
  return {best, *arg};
}

PredictabilityResult weighted_max_predictability(
    const ContextualityScenario& gamma_g, const RVector& q) {
  return weighted_max_predictability(gamma_g, q,
                                     indeterministic_vertices(gamma_g));
}

OptimalQResult optimal_q(const ContextualityScenario& gamma_g) {
  auto ind = indeterministic_vertices(gamma_g);
  if (ind.empty())
    throw ValidationError("NoIndeterministicVertices",
                          "beta is undefined: no indeterministic extremal "
                          "models");
  const std::size_t ne = gamma_g.edge_count();
  // Epigraph LP: minimize t subject to sum_e q_e zeta_e(p) <= t for each
  // indeterministic vertex p, q a distribution. Variables (q_1..q_ne, t).
  RationalLP lp;
  lp.num_vars = ne + 1;
  lp.objective.assign(ne + 1, 0);
  lp.objective[ne] = 1;
  for (const auto& m : ind) {
    RVector z = zeta_profile(gamma_g, m);
    RVector row(ne + 1, 0);
    for (std::size_t e = 0; e < ne; ++e) row[e] = z[e];
    row[ne] = -1;
    lp.le_lhs.push_back(std::move(row));
    lp.le_rhs.push_back(0);
  }
  RVector sum_row(ne + 1, 1);
  sum_row[ne] = 0;
  lp.eq_lhs.push_back(std::move(sum_row));
  lp.eq_rhs.push_back(1);
  lp.lower.assign(ne + 1, Rational(0));
  lp.lower[ne].reset();
  auto res = lp_solve(lp, LPSense::Min);
  if (res.status != LPStatus::Optimal)
    throw SolverError("Infeasible", "optimal_q minimax LP failed");
  OptimalQResult out;
  out.q.assign(res.point.begin(), res.point.begin() + ne);
  out.beta = res.value;
  return out;
}

InvariantBundle invariant_bundle(const WeightedGraph& g,
                                 const ContextualityScenario& gamma_g,
                                 const RVector& q) {
  InvariantBundle b;
  b.alpha = independence_number(g).value;
  b.theta = lovasz_theta(g);
  b.alpha_star = fractional_packing(g).value;
  b.beta = weighted_max_predictability(gamma_g, q).value;
  b.q_used = q;
  return b;
}

}  // namespace nctx
