#include <doctest.h>

#include <algorithm>

#include "nctx/errors.hpp"
#include "nctx/library.hpp"
#include "nctx/scenario.hpp"

using namespace nctx;

TEST_CASE("scenario validation rejects malformed hypergraphs") {
  CHECK_THROWS_AS(ContextualityScenario::validate({"a", "b"}, {{"a", "b"}, {"a"}}),
                  ValidationError);  // Sperner
  CHECK_THROWS_AS(ContextualityScenario::validate({"a", "b", "c"}, {{"a", "b"}}),
                  ValidationError);  // dangling vertex
  CHECK_THROWS_AS(ContextualityScenario::validate({"a", "a"}, {{"a"}}),
                  ValidationError);  // duplicate id
  CHECK_THROWS_AS(
      ContextualityScenario::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      ValidationError);  // duplicate hyperedge
  CHECK_THROWS_AS(ContextualityScenario::validate({"a"}, {{}}),
                  ValidationError);  // empty hyperedge
}

TEST_CASE("orthogonality graph of a triangle scenario") {
  auto s = ContextualityScenario::validate({"a", "b", "c"}, {{"a", "b", "c"}});
  auto og = orthogonality_graph(s);
  CHECK(og.edges.size() == 3);
  CHECK(og.adjacent("a", "b"));
  auto cliques = maximal_cliques(og);
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0] == std::vector<VertexId>{"a", "b", "c"});
}

TEST_CASE("maximal cliques of a five-cycle are its edges") {
  auto g = kcbs_g();
  auto cliques = maximal_cliques(g.graph);
  CHECK(cliques.size() == 5);
  for (const auto& c : cliques) CHECK(c.size() == 2);
}

TEST_CASE("the twenty-vertex scenario splits into five four-outcome blocks") {
  auto s = kcbs_gamma();
  CHECK(s.vertex_count() == 20);
  CHECK(s.edge_count() == 5);
  auto og = orthogonality_graph(s);
  // Each disjoint four-outcome measurement contributes a K4.
  CHECK(og.edges.size() == 5 * 6);
}

TEST_CASE("companion scenario of the five-cycle") {
  auto gg = kcbs_gamma_g();
  CHECK(gg.scenario.vertex_count() == 10);
  CHECK(gg.scenario.edge_count() == 5);
  std::size_t events = 0, nodet = 0;
  for (const auto& [v, role] : gg.roles)
    (role == VertexRole::Event ? events : nodet)++;
  CHECK(events == 5);
  CHECK(nodet == 5);
  // Every maximal clique became a hyperedge, so the principle holds.
  CHECK(structural_specker_check(gg.scenario).holds);
}

TEST_CASE("structural principle fails on the 18-ray scenario") {
  auto s = cega_18();
  auto verdict = structural_specker_check(s);
  CHECK_FALSE(verdict.holds);
  CHECK(verdict.violating_clique.size() == 3);
  // The violating clique is pairwise exclusive but not a hyperedge.
  auto og = orthogonality_graph(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(og.adjacent(verdict.violating_clique[i], verdict.violating_clique[j]));
}

TEST_CASE("extension restores the structural principle") {
  auto s = cega_18();
  auto ext = specker_extension(s);
  CHECK(ext.vertex_count() == 24);  // six triangles gain one vertex each
  CHECK(ext.edge_count() == 15);
  CHECK(structural_specker_check(ext).holds);
  // Idempotent on scenarios that already satisfy the principle.
  auto again = specker_extension(ext);
  CHECK(again.vertex_count() == ext.vertex_count());
  CHECK(again.edge_count() == ext.edge_count());
}

TEST_CASE("the 18-ray orthogonality graph is 6-regular with 15 cliques") {
  auto s = cega_18();
  auto og = orthogonality_graph(s);
  for (const auto& v : og.vertices) {
    std::size_t deg = 0;
    for (const auto& u : og.vertices)
      if (u != v && og.adjacent(u, v)) ++deg;
    CHECK(deg == 6);
  }
  auto cliques = maximal_cliques(og);
  CHECK(cliques.size() == 15);
  std::size_t four = 0, three = 0;
  for (const auto& c : cliques) {
    if (c.size() == 4) ++four;
    if (c.size() == 3) ++three;
  }
  CHECK(four == 9);
  CHECK(three == 6);
}

TEST_CASE("source companion counts") {
  auto gg = kcbs_gamma_g();
  auto sigma = build_sigma_g(gg.scenario);
  CHECK(sigma.setting_count() == 6);
  CHECK(sigma.star_edge.size() == 2);
  CHECK(sigma.event_count() ==
        gg.scenario.vertex_count() * gg.scenario.edge_count() + 2);
}

TEST_CASE("no-detection ids are deterministic") {
  CHECK(no_detection_id({"b", "a"}) == no_detection_id({"a", "b"}));
}

TEST_CASE("library dispatch") {
  CHECK(library_scenario("cega_18").vertex_count() == 18);
  CHECK(library_scenario("cega_27").vertex_count() == 27);
  CHECK(library_scenario("n_cycle(7)").vertex_count() == 14);
  CHECK_THROWS_AS(library_scenario("nope"), ValidationError);
  CHECK_THROWS_AS(n_cycle(2), ValidationError);
}
