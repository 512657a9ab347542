#pragma once

#include <vector>

#include "nctx/errors.hpp"
#include "nctx/rational.hpp"

namespace nctx {

// Bounded polytope in H-representation: eq_lhs x = eq_rhs, le_lhs x <= le_rhs.
// Callers only build probability polytopes, so boundedness is expected; an
// unbounded input is reported, not silently truncated.
struct HRepPolytope {
  std::size_t num_vars = 0;
  RMatrix eq_lhs;
  RVector eq_rhs;
  RMatrix le_lhs;
  RVector le_rhs;
};

// Exact, complete, duplicate-free vertex list, lexicographically sorted.
// Double description over the homogenized cone; equalities are eliminated
// first by exact Gaussian elimination.
// Throws TooLarge (num_vars > 32) and Unbounded (a recession ray survives).
std::vector<RVector> enumerate_vertices(const HRepPolytope& p);

}  // namespace nctx
