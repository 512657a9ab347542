#include <doctest.h>

#include <random>

#include "nctx/library.hpp"
#include "nctx/models.hpp"

using namespace nctx;

namespace {

// Seeded random convex mixture of a list of models, with rational weights.
ProbModel random_mixture(const std::vector<ProbModel>& pool,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, 9);
  std::vector<int> w(pool.size());
  int total = 0;
  while (total == 0) {
    for (auto& x : w) total += (x = coeff(rng));
  }
  ProbModel out;
  for (const auto& [v, p] : pool.front().probabilities) out.probabilities[v] = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (w[i] == 0) continue;
    Rational weight(w[i], total);
    for (const auto& [v, p] : pool[i].probabilities)
      out.probabilities[v] += weight * p;
  }
  return out;
}

}  // namespace

TEST_CASE("model validation names the failure") {
  auto s = kcbs_gamma_g().scenario;
  std::map<VertexId, Rational> raw;
  for (const auto& v : s.vertices()) raw[v] = 0;
  CHECK_THROWS_AS(check_model(s, raw), ValidationError);  // normalization
  raw.erase(raw.begin()->first);
  CHECK_THROWS_AS(check_model(s, raw), ValidationError);  // missing vertex
}

TEST_CASE("deterministic model backtracking agrees with the polytope") {
  for (const char* name : {"kcbs_gamma_g", "cega_27"}) {
    auto s = library_scenario(name);
    auto det = deterministic_models(s);
    auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
    CHECK(det.size() == part.deterministic.size());
  }
}

TEST_CASE("companion of the five-cycle has a unique indeterministic vertex") {
  auto s = kcbs_gamma_g().scenario;
  auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
  CHECK(part.deterministic.size() == 11);
  REQUIRE(part.indeterministic.size() == 1);
  const auto& m = part.indeterministic.front();
  auto roles = kcbs_gamma_g().roles;
  for (const auto& [v, p] : m.probabilities)
    CHECK(p == (roles.at(v) == VertexRole::Event ? Rational(1, 2) : Rational(0)));
}

TEST_CASE("companion of the four-cycle is entirely deterministic") {
  auto s = build_gamma_g(chsh_4cycle()).scenario;
  auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
  CHECK(part.deterministic.size() == 7);
  CHECK(part.indeterministic.empty());
}

TEST_CASE("classical membership certificates") {
  auto s = kcbs_gamma_g().scenario;
  auto det = deterministic_models(s);
  std::mt19937_64 rng(20260826);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_mixture(det, rng);
    auto cert = in_classical(s, m);
    CHECK(cert.classical);
    // The returned weights reconstruct the model.
    ProbModel rebuilt;
    for (const auto& v : s.vertices()) rebuilt.probabilities[v] = 0;
    REQUIRE(cert.weights.size() == det.size());
    for (std::size_t i = 0; i < det.size(); ++i)
      for (const auto& [v, p] : det[i].probabilities)
        rebuilt.probabilities[v] += cert.weights[i] * p;
    CHECK(rebuilt.probabilities == m.probabilities);
  }
  // The indeterministic vertex is outside the classical set.
  auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
  CHECK_FALSE(in_classical(s, part.indeterministic.front()).classical);
}

TEST_CASE("consistent exclusivity detects a violating clique") {
  auto s = cega_27();
  // The general-class optimum of the combined expression (21/2) exceeds its
  // clique-constrained optimum (10), so any maximizer must break a clique.
  auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
  auto w = cega_expr3();
  Rational best = -1;
  const ProbModel* argmax = nullptr;
  for (const auto& m : part.indeterministic) {
    Rational val = 0;
    for (const auto& [v, x] : w) val += x * m.at(v);
    if (val > best) {
      best = val;
      argmax = &m;
    }
  }
  REQUIRE(argmax != nullptr);
  CHECK(best == Rational(21, 2));
  auto verdict = in_ce1(s, *argmax);
  CHECK_FALSE(verdict.holds);
  Rational clique_sum = 0;
  for (const auto& v : verdict.violating_clique) clique_sum += argmax->at(v);
  CHECK(clique_sum > 1);
}

TEST_CASE("colourability") {
  CHECK_FALSE(ks_colourable(cega_18()).colourable);
  auto verdict = ks_colourable(cega_27());
  CHECK(verdict.colourable);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->deterministic());
}

TEST_CASE("bijection round-trips on enumerated vertices and mixtures") {
  auto s = cega_18();
  auto ext = specker_extension(s);
  auto verts = enumerate_vertices(model_polytope(ext));
  CHECK(verts.size() == 120);
  std::vector<ProbModel> restricted;
  for (const auto& x : verts) {
    auto m_ext = model_from_point(ext, x);
    auto m = ce1_bijection_back(s, m_ext);
    CHECK(in_ce1(s, m).holds);
    auto forward = ce1_bijection_forward(s, ext, m);
    CHECK(forward.probabilities == m_ext.probabilities);
    restricted.push_back(std::move(m));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_mixture(restricted, rng);
    auto round = ce1_bijection_back(s, ce1_bijection_forward(s, ext, m));
    CHECK(round.probabilities == m.probabilities);
  }
}

TEST_CASE("forward bijection rejects models outside the clique constraints") {
  auto s = cega_27();
  auto ext = specker_extension(s);
  auto part = classify_extremal(s, enumerate_vertices(model_polytope(s)));
  auto w = cega_expr3();
  for (const auto& m : part.indeterministic) {
    Rational val = 0;
    for (const auto& [v, x] : w) val += x * m.at(v);
    if (val == Rational(21, 2)) {
      CHECK_THROWS_AS(ce1_bijection_forward(s, ext, m), ValidationError);
      return;
    }
  }
  FAIL("expected an optimizer outside the clique constraints");
}

TEST_CASE("expression optimization hierarchy by class") {
  auto s = cega_27();
  auto w = cega_expr3();
  CHECK(max_expression(s, w, ModelClassKind::C) == Rational(9));
  CHECK(max_expression(s, w, ModelClassKind::CE1) == Rational(10));
  CHECK(max_expression(s, w, ModelClassKind::G) == Rational(21, 2));
}
