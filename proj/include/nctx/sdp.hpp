#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nctx/errors.hpp"

namespace nctx {

// Dense real SDP: maximize Tr(C X) subject to Tr(A_i X) = b_i, X PSD.
struct DenseSDP {
  Eigen::MatrixXd objective;  // symmetric C
  std::vector<std::pair<Eigen::MatrixXd, double>> constraints;  // (A_i, b_i)
};

struct SDPResult {
  double value = 0.0;
  Eigen::MatrixXd x;
  std::vector<double> dual;  // multiplier estimate y_i for each constraint
  std::size_t iterations = 0;
};

// Operator-splitting solver (ADMM). Converges to primal/dual residual
// < 1e-8; throws NoConvergence after 50000 iterations. Returned matrix is
// PSD within a -1e-9 eigenvalue tolerance by construction of the projection.
SDPResult sdp_solve(const DenseSDP& p);

}  // namespace nctx
