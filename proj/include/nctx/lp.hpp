#pragma once

#include <optional>
#include <vector>

#include "nctx/errors.hpp"
#include "nctx/rational.hpp"

namespace nctx {

// Exact-rational linear program. All constraint rows span the full variable
// vector; bounds are optional per variable (absent means free on that side).
struct RationalLP {
  std::size_t num_vars = 0;
  RVector objective;  // empty means zero objective
  RMatrix eq_lhs;
  RVector eq_rhs;
  RMatrix le_lhs;
  RVector le_rhs;
  std::vector<std::optional<Rational>> lower;  // per variable; empty vector = all free
  std::vector<std::optional<Rational>> upper;

  void check_dimensions() const;
};

enum class LPSense { Max, Min };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  RVector point;
};

// Exact primal simplex (two-phase, Bland's rule). Never returns an
// approximate answer; Infeasible/Unbounded are reported in the status.
LPResult lp_solve(const RationalLP& p, LPSense sense);

// Feasibility probe: zero objective, same status semantics.
LPResult lp_feasible_point(const RationalLP& constraints);

}  // namespace nctx
