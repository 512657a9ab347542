#include <doctest.h>

#include "nctx/polytope.hpp"

using namespace nctx;

namespace {

HRepPolytope box(std::size_t n) {
  HRepPolytope p;
  p.num_vars = n;
  for (std::size_t i = 0; i < n; ++i) {
    RVector lo(n, 0), hi(n, 0);
    lo[i] = -1;
    hi[i] = 1;
    p.le_lhs.push_back(lo);
    p.le_rhs.push_back(0);
    p.le_lhs.push_back(hi);
    p.le_rhs.push_back(1);
  }
  return p;
}

}  // namespace

TEST_CASE("unit square has four vertices") {
  auto v = enumerate_vertices(box(2));
  REQUIRE(v.size() == 4);
  CHECK(v.front() == RVector{0, 0});
  CHECK(v.back() == RVector{1, 1});
}

TEST_CASE("unit cube has eight vertices") {
  CHECK(enumerate_vertices(box(3)).size() == 8);
}

TEST_CASE("probability simplex via an equality") {
  HRepPolytope p;
  p.num_vars = 3;
  p.eq_lhs.push_back({1, 1, 1});
  p.eq_rhs.push_back(1);
  for (std::size_t i = 0; i < 3; ++i) {
    RVector lo(3, 0);
    lo[i] = -1;
    p.le_lhs.push_back(lo);
    p.le_rhs.push_back(0);
  }
  auto v = enumerate_vertices(p);
  REQUIRE(v.size() == 3);
  for (const auto& x : v) {
    Rational s = 0;
    for (const auto& c : x) s += c;
    CHECK(s == Rational(1));
  }
}

TEST_CASE("fractional vertex of the pentagon relaxation") {
  // x_i + x_{i+1} <= 1 around a five-cycle, x >= 0: the all-1/2 point is a
  // vertex alongside the 11 stable-set indicators.
  HRepPolytope p;
  p.num_vars = 5;
  for (std::size_t i = 0; i < 5; ++i) {
    RVector row(5, 0), lo(5, 0);
    row[i] = 1;
    row[(i + 1) % 5] = 1;
    p.le_lhs.push_back(row);
    p.le_rhs.push_back(1);
    lo[i] = -1;
    p.le_lhs.push_back(lo);
    p.le_rhs.push_back(0);
  }
  auto v = enumerate_vertices(p);
  CHECK(v.size() == 12);
  CHECK(std::count(v.begin(), v.end(),
                   RVector(5, Rational(1, 2))) == 1);
}

TEST_CASE("infeasible systems yield an empty list") {
  HRepPolytope p;
  p.num_vars = 1;
  p.eq_lhs.push_back({1});
  p.eq_rhs.push_back(2);
  p.le_lhs.push_back({1});
  p.le_rhs.push_back(1);
  CHECK(enumerate_vertices(p).empty());
}

TEST_CASE("unbounded regions are reported") {
  HRepPolytope p;  // x >= 0 only
  p.num_vars = 1;
  p.le_lhs.push_back({-1});
  p.le_rhs.push_back(0);
  CHECK_THROWS_AS(enumerate_vertices(p), SolverError);
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(enumerate_vertices(box(33)), ValidationError);
}

TEST_CASE("degenerate three-dimensional pyramid") {
  // Square base with apex: five vertices, four of them on degenerate
  // intersections of three or more facets.
  HRepPolytope p;
  p.num_vars = 3;
  p.le_lhs = {{0, 0, -1}, {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  p.le_rhs = {0, 1, 1, 1, 1};
  auto v = enumerate_vertices(p);
  CHECK(v.size() == 5);
  CHECK(std::count(v.begin(), v.end(), RVector{0, 0, 1}) == 1);
}
