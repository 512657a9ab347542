#pragma once

#include <map>
#include <string>
#include <vector>

#include "nctx/scenario.hpp"

namespace nctx {

// Built-in objects used throughout the test corpus and the CLI.

// Twenty-vertex hypergraph of five four-outcome joint measurements.
ContextualityScenario kcbs_gamma();

// Unit-weight five-cycle carrying the pentagon inequality.
WeightedGraph kcbs_g();

// Ten-vertex companion scenario of the five-cycle (one no-detection vertex
// per edge), plus the vertex role map.
GammaG kcbs_gamma_g();

// Unit-weight n-cycle (n >= 3) and, via build_gamma_g, its companion.
WeightedGraph n_cycle(std::size_t n);

// Four-cycle and its eight-vertex companion scenario.
WeightedGraph chsh_4cycle();

// KS-uncolourable 18-vertex scenario: 9 four-element hyperedges, every
// vertex in exactly two of them (the standard 18-ray incidence structure,
// shipped as data; correctness is pinned by the uncolourability test).
ContextualityScenario cega_18();

// cega_18 with one no-detection vertex appended to each hyperedge.
ContextualityScenario cega_27();

// The three pairwise-exclusive cega vertices (a maximal clique that is not
// a hyperedge) entering the second expression; subset of cega_18 vertices.
std::vector<VertexId> cega_triangle();

// Expression weights over cega_27: per-hyperedge event sums count shared
// vertices once per hyperedge, so expr1 weights every cega_18 vertex twice;
// expr2 weights the triangle once; expr3 is their sum.
std::map<VertexId, Rational> cega_expr1();
std::map<VertexId, Rational> cega_expr2();
std::map<VertexId, Rational> cega_expr3();

// Name-based dispatch for the CLI: kcbs_gamma, kcbs_g (as its companion
// scenario), kcbs_gamma_g, n_cycle(k), cega_18, cega_27, chsh_4cycle.
// Throws UnknownName.
ContextualityScenario library_scenario(const std::string& name);

}  // namespace nctx
