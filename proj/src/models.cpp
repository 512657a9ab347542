#include "nctx/models.hpp"

#include <algorithm>

#include "nctx/lp.hpp"

namespace nctx {

bool ProbModel::deterministic() const {
  for (const auto& [v, p] : probabilities)
    if (p != 0 && p != 1) return false;
  return true;
}

ProbModel check_model(const ContextualityScenario& s,
                      const std::map<VertexId, Rational>& raw) {
  for (const auto& v : s.vertices()) {
    auto it = raw.find(v);
    if (it == raw.end())
      throw ValidationError("MissingVertex",
                            "no probability assigned to vertex '" + v + "'");
    if (it->second < 0)
      throw ValidationError("NegativeProbability",
                            "p(" + v + ") = " + to_string(it->second));
  }
  for (const auto& [v, p] : raw)
    if (!s.has_vertex(v))
      throw ValidationError("MissingVertex",
                            "probability for unknown vertex '" + v + "'");
  for (const auto& e : s.hyperedges()) {
    Rational sum = 0;
    std::string label;
    for (const auto& v : e) {
      sum += raw.at(v);
      label += (label.empty() ? "" : ",") + v;
    }
    if (sum != 1)
      throw ValidationError("NormalizationFailure", "hyperedge {" + label +
                                                        "} sums to " +
                                                        to_string(sum));
  }
  return ProbModel{raw};
}

HRepPolytope model_polytope(const ContextualityScenario& s) {
  const std::size_t n = s.vertex_count();
  HRepPolytope p;
  p.num_vars = n;
  for (const auto& e : s.hyperedges()) {
    RVector row(n, 0);
    for (const auto& v : e) row[s.index_of(v)] = 1;
    p.eq_lhs.push_back(std::move(row));
    p.eq_rhs.push_back(1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RVector row(n, 0);
    row[i] = -1;
    p.le_lhs.push_back(std::move(row));
    p.le_rhs.push_back(0);
  }
  return p;
}

ProbModel model_from_point(const ContextualityScenario& s, const RVector& x) {
  ProbModel m;
  for (std::size_t i = 0; i < s.vertex_count(); ++i)
    m.probabilities[s.vertices()[i]] = x[i];
  return m;
}

RVector point_from_model(const ContextualityScenario& s, const ProbModel& m) {
  RVector x(s.vertex_count());
  for (std::size_t i = 0; i < s.vertex_count(); ++i)
    x[i] = m.probabilities.at(s.vertices()[i]);
  return x;
}

ExtremalPartition classify_extremal(const ContextualityScenario& s,
                                    const std::vector<RVector>& vertices) {
  ExtremalPartition part;
  for (const auto& x : vertices) {
    bool det = std::all_of(x.begin(), x.end(), [](const Rational& v) {
      return v == 0 || v == 1;
    });
    (det ? part.deterministic : part.indeterministic)
        .push_back(model_from_point(s, x));
  }
  return part;
}

std::vector<ProbModel> deterministic_models(const ContextualityScenario& s) {
  // Backtracking over hyperedges: pick the unique probability-1 vertex of
  // each edge. State: +1 chosen, -1 forced to zero, 0 undecided.
  const auto& edges = s.hyperedges();
  std::vector<int> state(s.vertex_count(), 0);
  std::vector<ProbModel> out;

  auto rec = [&](auto&& self, std::size_t ei) -> void {
    if (ei == edges.size()) {
      ProbModel m;
      for (std::size_t i = 0; i < s.vertex_count(); ++i)
        m.probabilities[s.vertices()[i]] = state[i] == 1 ? 1 : 0;
      out.push_back(std::move(m));
      return;
    }
    std::vector<std::size_t> members;
    std::size_t chosen = 0;
    for (const auto& v : edges[ei]) {
      std::size_t idx = s.index_of(v);
      members.push_back(idx);
      if (state[idx] == 1) ++chosen;
    }
    if (chosen > 1) return;
    if (chosen == 1) {
      std::vector<std::size_t> flipped;
      for (auto idx : members)
        if (state[idx] == 0) {
          state[idx] = -1;
          flipped.push_back(idx);
        }
      self(self, ei + 1);
      for (auto idx : flipped) state[idx] = 0;
      return;
    }
    for (auto pick : members) {
      if (state[pick] == -1) continue;
      std::vector<std::pair<std::size_t, int>> saved;
      saved.emplace_back(pick, state[pick]);
      state[pick] = 1;
      bool ok = true;
      for (auto idx : members) {
        if (idx == pick) continue;
        if (state[idx] == 1) {
          ok = false;
          break;
        }
        if (state[idx] == 0) {
          saved.emplace_back(idx, 0);
          state[idx] = -1;
        }
      }
      if (ok) self(self, ei + 1);
      for (auto it = saved.rbegin(); it != saved.rend(); ++it)
        state[it->first] = it->second;
    }
  };
  rec(rec, 0);

  std::vector<RVector> pts;
  for (const auto& m : out) pts.push_back(point_from_model(s, m));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ProbModel> dedup;
  for (const auto& x : pts) dedup.push_back(model_from_point(s, x));
  return dedup;
}

ClassicalityCertificate in_classical(const ContextualityScenario& s,
                                     const ProbModel& m) {
  auto dets = deterministic_models(s);
  ClassicalityCertificate cert;
  if (dets.empty()) return cert;

  // Feasibility of sum_k mu_k d_k = m, sum mu = 1, mu >= 0.
  const std::size_t n = s.vertex_count();
  RationalLP lp;
  lp.num_vars = dets.size();
  RVector target = point_from_model(s, m);
  for (std::size_t i = 0; i < n; ++i) {
    RVector row(dets.size());
    for (std::size_t k = 0; k < dets.size(); ++k)
      row[k] = dets[k].probabilities.at(s.vertices()[i]);
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(target[i]);
  }
  lp.eq_lhs.push_back(RVector(dets.size(), 1));
  lp.eq_rhs.push_back(1);
  lp.lower.assign(dets.size(), Rational(0));
  auto res = lp_feasible_point(lp);
  if (res.status != LPStatus::Optimal) return cert;
  cert.classical = true;
  cert.weights = res.point;
  return cert;
}

CE1Verdict in_ce1(const ContextualityScenario& s, const ProbModel& m) {
  auto cliques = maximal_cliques(orthogonality_graph(s));
  for (const auto& c : cliques) {
    Rational sum = 0;
    for (const auto& v : c) sum += m.probabilities.at(v);
    if (sum > 1) return {false, c};
  }
  return {true, {}};
}

ColourabilityVerdict ks_colourable(const ContextualityScenario& s) {
  auto dets = deterministic_models(s);
  if (dets.empty()) return {false, std::nullopt};
  return {true, dets.front()};
}

ProbModel ce1_bijection_forward(const ContextualityScenario& s,
                                const ContextualityScenario& extension,
                                const ProbModel& m) {
  auto verdict = in_ce1(s, m);
  if (!verdict.holds) {
    std::string label;
    for (const auto& v : verdict.violating_clique)
      label += (label.empty() ? "" : ",") + v;
    throw ValidationError("NotInCE1",
                          "clique {" + label + "} sums above 1");
  }
  ProbModel out = m;
  // Each added vertex closes one promoted clique: its probability is the
  // normalization gap of that clique.
  for (const auto& e : extension.hyperedges()) {
    VertexId added;
    Rational sum = 0;
    for (const auto& v : e) {
      if (s.has_vertex(v))
        sum += m.probabilities.at(v);
      else
        added = v;
    }
    if (!added.empty()) out.probabilities[added] = 1 - sum;
  }
  return check_model(extension, out.probabilities);
}

ProbModel ce1_bijection_back(const ContextualityScenario& s,
                             const ProbModel& m_ext) {
  ProbModel out;
  for (const auto& v : s.vertices())
    out.probabilities[v] = m_ext.probabilities.at(v);
  return out;
}

Rational max_expression(const ContextualityScenario& s,
                        const std::map<VertexId, Rational>& weights,
                        ModelClassKind klass) {
  for (const auto& [v, w] : weights)
    if (!s.has_vertex(v))
      throw ValidationError("MissingVertex",
                            "expression weight on unknown vertex '" + v + "'");
  const std::size_t n = s.vertex_count();
  RVector w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = weights.find(s.vertices()[i]);
    if (it != weights.end()) w[i] = it->second;
  }

  if (klass == ModelClassKind::C) {
    auto dets = deterministic_models(s);
    if (dets.empty())
      throw ValidationError("EmptyClass",
                            "scenario is KS-uncolourable: C is empty");
    Rational best;
    bool first = true;
    for (const auto& d : dets) {
      Rational val = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (w[i] != 0) val += w[i] * d.probabilities.at(s.vertices()[i]);
      if (first || val > best) {
        best = val;
        first = false;
      }
    }
    return best;
  }

  RationalLP lp;
  lp.num_vars = n;
  lp.objective = w;
  for (const auto& e : s.hyperedges()) {
    RVector row(n, 0);
    for (const auto& v : e) row[s.index_of(v)] = 1;
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(1);
  }
  lp.lower.assign(n, Rational(0));
  if (klass == ModelClassKind::CE1) {
    for (const auto& c : maximal_cliques(orthogonality_graph(s))) {
      RVector row(n, 0);
      for (const auto& v : c) row[s.index_of(v)] = 1;
      lp.le_lhs.push_back(std::move(row));
      lp.le_rhs.push_back(1);
    }
  }
  auto res = lp_solve(lp, LPSense::Max);
  if (res.status != LPStatus::Optimal)
    throw SolverError("EmptyClass", "model polytope is infeasible");
  return res.value;
}

}  // namespace nctx
