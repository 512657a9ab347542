#include <doctest.h>

#include "nctx/json_io.hpp"
#include "nctx/library.hpp"

using namespace nctx;

TEST_CASE("scenario json round-trip") {
  auto s = kcbs_gamma_g().scenario;
  auto back = scenario_from_json(scenario_to_json(s));
  CHECK(back.vertices() == s.vertices());
  CHECK(back.hyperedges() == s.hyperedges());
}

TEST_CASE("scenario json validation surfaces structural errors") {
  CHECK_THROWS_AS(scenario_from_json("{"), ValidationError);
  CHECK_THROWS_AS(scenario_from_json("{\"vertices\": []}"), ValidationError);
  CHECK_THROWS_AS(scenario_from_json(
                      R"({"vertices":["a","b"],"hyperedges":[["a","b"],["a"]]})"),
                  ValidationError);
}

TEST_CASE("weighted graph json") {
  auto g = weighted_graph_from_json(R"({
    "vertices": ["a", "b", "c"],
    "hyperedges": [["a", "b", "c"]],
    "weights": {"a": "1/2", "b": 1, "c": 0.25}
  })");
  CHECK(g.weights.at("a") == Rational(1, 2));
  CHECK(g.weights.at("b") == Rational(1));
  CHECK(g.weights.at("c") == Rational(1, 4));
  CHECK(g.graph.adjacent("a", "b"));
}

TEST_CASE("weights restrict the graph") {
  auto g = weighted_graph_from_json(R"({
    "vertices": ["a", "b", "c"],
    "hyperedges": [["a", "b", "c"]],
    "weights": {"a": 1, "b": 1}
  })");
  CHECK(g.graph.vertices.size() == 2);
  CHECK(g.weights.count("c") == 0);
}

TEST_CASE("model json") {
  auto mf = model_from_json(R"({
    "scenario": "kcbs_gamma_g",
    "probabilities": {"u0": "1/2", "nd:u0+u1": 0}
  })");
  CHECK(mf.scenario_ref == "kcbs_gamma_g");
  CHECK(mf.probabilities.at("u0") == Rational(1, 2));
  CHECK(mf.probabilities.at("nd:u0+u1") == Rational(0));
}
