#include <doctest.h>

#include "nctx/errors.hpp"
#include "nctx/lp.hpp"
#include "nctx/rational.hpp"

using namespace nctx;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_double(Rational(1, 2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("simplex solves a bounded maximization exactly") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), 14/5.
  RationalLP lp;
  lp.num_vars = 2;
  lp.objective = {1, 1};
  lp.le_lhs = {{1, 2}, {3, 1}};
  lp.le_rhs = {4, 6};
  lp.lower = {Rational(0), Rational(0)};
  auto r = lp_solve(lp, LPSense::Max);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.point[0] == Rational(8, 5));
  CHECK(r.point[1] == Rational(6, 5));
}

TEST_CASE("simplex reports infeasible systems") {
  RationalLP lp;
  lp.num_vars = 1;
  lp.objective = {1};
  lp.eq_lhs = {{1}};
  lp.eq_rhs = {2};
  lp.le_lhs = {{1}};
  lp.le_rhs = {1};
  lp.lower = {Rational(0)};
  CHECK(lp_solve(lp, LPSense::Max).status == LPStatus::Infeasible);
}

TEST_CASE("simplex reports unbounded problems") {
  RationalLP lp;
  lp.num_vars = 1;
  lp.objective = {1};
  lp.lower = {Rational(0)};
  CHECK(lp_solve(lp, LPSense::Max).status == LPStatus::Unbounded);
}

TEST_CASE("free variables and equality rows") {
  // min x - y (sense Min) s.t. x + y = 1, -1 <= y <= 1 (x free) -> x = 1 - y, minimize
  // 1 - 2y -> y = 1, x = 0, value -1.
  RationalLP lp;
  lp.num_vars = 2;
  lp.objective = {1, -1};
  lp.eq_lhs = {{1, 1}};
  lp.eq_rhs = {1};
  lp.lower = {std::nullopt, Rational(-1)};
  lp.upper = {std::nullopt, Rational(1)};
  auto r = lp_solve(lp, LPSense::Min);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Rational(-1));
  CHECK(r.point[0] + r.point[1] == Rational(1));
}
