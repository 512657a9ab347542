// Acceptance gate: ten end-to-end checks, one printed line each. Exits
// nonzero when any check fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nctx/invariants.hpp"
#include "nctx/library.hpp"
#include "nctx/models.hpp"
#include "nctx/nci.hpp"
#include "nctx/quantum.hpp"

using namespace nctx;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("criterion %2d %-52s %s%s\n", number, label.c_str(),
              ok ? "PASS" : "FAIL", note.c_str());
  if (!ok) ++failures;
}

ProbModel mixture(const std::vector<ProbModel>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, 9);
  std::vector<int> w(pool.size());
  int total = 0;
  while (total == 0)
    for (auto& x : w) total += (x = coeff(rng));
  ProbModel out;
  for (const auto& [v, p] : pool.front().probabilities) out.probabilities[v] = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (w[i] == 0) continue;
    for (const auto& [v, p] : pool[i].probabilities)
      out.probabilities[v] += Rational(w[i], total) * p;
  }
  return out;
}

WeightedGraph unit_events_graph(const GammaG& gg) {
  auto og = orthogonality_graph(gg.scenario);
  OrthoGraph sub;
  std::map<VertexId, Rational> w;
  for (const auto& v : og.vertices)
    if (gg.roles.at(v) == VertexRole::Event) {
      sub.vertices.push_back(v);
      w[v] = 1;
    }
  for (const auto& e : og.edges)
    if (w.count(e.first) && w.count(e.second)) sub.edges.insert(e);
  return WeightedGraph::make(sub, w);
}

NCIReport pentagon_report(double r1, double r2) {
  auto k = kcbs_realization(r1, r2);
  auto t = born_table(k.gamma_g, k.realization);
  RVector q(5, Rational(1, 5));
  auto inv = invariant_bundle(k.g, k.gamma_g, q);
  return evaluate_nci(compute_corr(t, q).value, compute_r(t, k.g).value, t.p0,
                      inv);
}

}  // namespace

int main() {
  auto gg = kcbs_gamma_g();
  RVector q5(5, Rational(1, 5));

  criterion(1, "pentagon invariants alpha/theta/alpha*/beta", [&] {
    if (independence_number(kcbs_g()).value != Rational(2)) return false;
    if (fractional_packing(kcbs_g()).value != Rational(5, 2)) return false;
    if (std::abs(lovasz_theta(kcbs_g()) - 2.23607) > 1e-4) return false;
    if (weighted_max_predictability(gg.scenario, q5).value != Rational(1, 2))
      return false;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> coeff(1, 10);
    for (int trial = 0; trial < 10; ++trial) {
      int total = 0;
      std::vector<int> w(5);
      for (auto& x : w) total += (x = coeff(rng));
      RVector q;
      for (auto x : w) q.push_back(Rational(x, total));
      if (weighted_max_predictability(gg.scenario, q).value != Rational(1, 2))
        return false;
    }
    return true;
  });

  criterion(2, "pentagon polytope: 12 vertices, 11 + 1 split", [&] {
    auto part = classify_extremal(gg.scenario,
                                  enumerate_vertices(model_polytope(gg.scenario)));
    if (part.deterministic.size() != 11) return false;
    if (part.indeterministic.size() != 1) return false;
    for (const auto& [v, p] : part.indeterministic.front().probabilities) {
      auto want = gg.roles.at(v) == VertexRole::Event ? Rational(1, 2)
                                                      : Rational(0);
      if (p != want) return false;
    }
    return true;
  });

  criterion(3, "noiseless realization: Corr, R, p0, verdict", [&] {
    auto rep = pentagon_report(1.0, 1.0);
    return std::abs(rep.corr - 1.0) < 1e-9 &&
           std::abs(rep.r_value - std::sqrt(5.0)) < 1e-9 &&
           rep.p0 == 1.0 / 3.0 && rep.witness == Witness::Violation;
  });

  criterion(4, "depolarizing sweep formulas and verdict flip", [&] {
    for (int i = 0; i < 20; ++i) {
      double prod = static_cast<double>(i) / 19.0;
      auto rep = pentagon_report(prod, 1.0);
      double corr_want = 1.0 / 3.0 + (2.0 / 3.0) * prod;
      double r_want = prod * std::sqrt(5.0) + (5.0 / 3.0) * (1.0 - prod);
      if (std::abs(rep.corr - corr_want) > 1e-9) return false;
      if (std::abs(rep.r_value - r_want) > 1e-9) return false;
    }
    double lo = 0.85, hi = 1.0;
    for (int it = 0; it < 40; ++it) {
      double mid = 0.5 * (lo + hi);
      (pentagon_report(mid, 1.0).witness == Witness::Violation ? hi : lo) = mid;
    }
    double flip = 0.5 * (lo + hi);
    double corr_at_flip = 1.0 / 3.0 + (2.0 / 3.0) * flip;
    return std::abs(flip - 0.908) < 1e-3 &&
           std::abs(corr_at_flip - 0.939) < 1e-3;
  });

  criterion(5, "fair-coin-flip bound and trine realization", [&] {
    auto b = fcf_bound();
    if (b.value != Rational(5, 6)) return false;
    if (b.achieving_vertex != RVector{Rational(1), Rational(1, 2), Rational(0)})
      return false;
    auto t = fcf_realization();
    if (std::abs(fcf_corr(t) - 1.0) > 1e-9) return false;
    Operator acc = Operator::Zero(2, 2);
    for (const auto& e : t.effects0) acc += e / 3.0;
    if ((acc - Operator::Identity(2, 2) / 2.0).norm() > 1e-12) return false;
    for (const auto& src : t.sources) {
      Operator avg = Operator::Zero(2, 2);
      for (const auto& [state, prior] : src) avg += prior * state;
      if ((avg - Operator::Identity(2, 2) / 2.0).norm() > 1e-12) return false;
    }
    return true;
  });

  criterion(6, "18-ray colourability and expression table", [&] {
    if (ks_colourable(cega_18()).colourable) return false;
    if (!ks_colourable(cega_27()).colourable) return false;
    auto s = cega_27();
    auto check = [&](const std::map<VertexId, Rational>& w, Rational c,
                     Rational ce, Rational g) {
      return max_expression(s, w, ModelClassKind::C) == c &&
             max_expression(s, w, ModelClassKind::CE1) == ce &&
             max_expression(s, w, ModelClassKind::G) == g;
    };
    return check(cega_expr1(), 8, 9, 9) &&
           check(cega_expr2(), 1, 1, Rational(3, 2)) &&
           check(cega_expr3(), 9, 10, Rational(21, 2));
  });

  criterion(7, "structural principle and the round-trip bijection", [&] {
    auto s = cega_18();
    if (structural_specker_check(s).holds) return false;
    auto ext = specker_extension(s);
    if (!structural_specker_check(ext).holds) return false;
    auto verts = enumerate_vertices(model_polytope(ext));
    std::vector<ProbModel> restricted;
    for (const auto& x : verts) {
      auto m_ext = model_from_point(ext, x);
      auto m = ce1_bijection_back(s, m_ext);
      if (ce1_bijection_forward(s, ext, m).probabilities != m_ext.probabilities)
        return false;
      restricted.push_back(std::move(m));
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      auto m = mixture(restricted, rng);
      auto round = ce1_bijection_back(s, ce1_bijection_forward(s, ext, m));
      if (round.probabilities != m.probabilities) return false;
    }
    return true;
  });

  criterion(8, "trivial measurements cannot violate", [&] {
    auto g5 = unit_events_graph(gg);
    auto gg4 = build_gamma_g(chsh_4cycle());
    auto g4 = unit_events_graph(gg4);
    RVector q4(4, Rational(1, 4));
    ProbModel pr_box;
    for (const auto& [v, role] : gg4.roles)
      pr_box.probabilities[v] =
          role == VertexRole::Event ? Rational(1, 2) : Rational(0);
    if (!certify_trivial_povm(gg4.scenario, pr_box, g4, q4).no_violation)
      return false;
    for (const auto& m : deterministic_models(gg.scenario))
      if (!certify_trivial_povm(gg.scenario, m, g5, q5).no_violation)
        return false;
    std::vector<ProbModel> pool5, pool4;
    for (const auto& x : enumerate_vertices(model_polytope(gg.scenario)))
      pool5.push_back(model_from_point(gg.scenario, x));
    for (const auto& x : enumerate_vertices(model_polytope(gg4.scenario)))
      pool4.push_back(model_from_point(gg4.scenario, x));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      if (!certify_trivial_povm(gg.scenario, mixture(pool5, rng), g5, q5)
               .no_violation)
        return false;
      if (!certify_trivial_povm(gg4.scenario, mixture(pool4, rng), g4, q4)
               .no_violation)
        return false;
    }
    return true;
  });

  criterion(9, "invariant sandwich and unit-correlation reduction", [&] {
    auto cega_g = [&] {
      auto og = orthogonality_graph(cega_18());
      std::map<VertexId, Rational> w;
      for (const auto& v : og.vertices) w[v] = 1;
      return WeightedGraph::make(og, w);
    }();
    std::vector<WeightedGraph> graphs = {kcbs_g(), chsh_4cycle(), n_cycle(3),
                                         n_cycle(7), cega_g};
    for (const auto& g : graphs) {
      double alpha = to_double(independence_number(g).value);
      double theta = lovasz_theta(g);
      double alpha_star = to_double(fractional_packing(g).value);
      if (alpha > theta + 1e-5 || theta > alpha_star + 1e-5) return false;
    }
    auto inv = invariant_bundle(kcbs_g(), gg.scenario, q5);
    auto rep = evaluate_nci(1.0, std::sqrt(5.0), 1.0 / 3.0, inv);
    return rep.bound_nci2 == to_double(inv.alpha);
  });

  criterion(10, "optimizer agrees with brute force; beta with a scan", [&] {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (const char* name : {"kcbs_gamma_g", "kcbs_gamma", "cega_18",
                             "cega_27", "chsh_gamma_g"}) {
      auto s = std::string(name) == "chsh_gamma_g"
                   ? build_gamma_g(chsh_4cycle()).scenario
                   : library_scenario(name);
      auto verts = enumerate_vertices(model_polytope(s));
      std::map<VertexId, Rational> w;
      for (const auto& v : s.vertices()) w[v] = coeff(rng);
      Rational brute = 0;
      for (const auto& x : verts) {
        Rational val = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
          val += w.at(s.vertices()[i]) * x[i];
        brute = std::max(brute, val);
      }
      if (max_expression(s, w, ModelClassKind::G) != brute) return false;
    }
    auto gg7 = build_gamma_g(n_cycle(7));
    auto ind = indeterministic_vertices(gg7.scenario);
    RVector q7(7, Rational(1, 7));
    Rational best = 0;
    for (const auto& m : ind) {
      Rational val = 0;
      std::size_t e = 0;
      for (const auto& edge : gg7.scenario.hyperedges()) {
        Rational zeta = 0;
        for (const auto& v : edge) zeta = std::max(zeta, m.at(v));
        val += q7[e++] * zeta;
      }
      best = std::max(best, val);
    }
    return weighted_max_predictability(gg7.scenario, q7).value == best;
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
