#include "nctx/sdp.hpp"

#include <cmath>

namespace nctx {

namespace {

constexpr std::size_t kMaxIter = 50000;
constexpr double kResidualTol = 1e-8;

double inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

}  // namespace

SDPResult sdp_solve(const DenseSDP& p) {
  const Eigen::Index d = p.objective.rows();
  if (p.objective.cols() != d)
    throw ValidationError("DimensionMismatch", "objective matrix not square");
  if (d > 64)
    throw ValidationError("TooLarge", "SDP dimension exceeds guard of 64");
  const std::size_t m = p.constraints.size();
  for (const auto& [a, b] : p.constraints)
    if (a.rows() != d || a.cols() != d)
      throw ValidationError("DimensionMismatch", "constraint matrix dimension");

  // Gram matrix of the constraint maps, factorized once; the affine
  // projection of M onto {Tr(A_i X) = b_i} is M - sum_i lambda_i A_i with
  // G lambda = A(M) - b.
  Eigen::MatrixXd gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      gram(i, j) = gram(j, i) =
          inner(p.constraints[i].first, p.constraints[j].first);
  Eigen::LDLT<Eigen::MatrixXd> gram_ldlt(gram);
  if (gram_ldlt.info() != Eigen::Success)
    throw SolverError("NoConvergence", "constraint Gram matrix not factorable");

  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(m);
  auto project_affine = [&](const Eigen::MatrixXd& mat) {
    Eigen::VectorXd resid(m);
    for (std::size_t i = 0; i < m; ++i)
      resid(i) = inner(p.constraints[i].first, mat) - p.constraints[i].second;
    lambda = gram_ldlt.solve(resid);
    Eigen::MatrixXd out = mat;
    for (std::size_t i = 0; i < m; ++i)
      out -= lambda(i) * p.constraints[i].first;
    return out;
  };

  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd z = x, u = x;
  double rho = 1.0;

  for (std::size_t iter = 1; iter <= kMaxIter; ++iter) {
    x = project_affine(z - u + p.objective / rho);
    Eigen::MatrixXd v = 0.5 * (x + u + (x + u).transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXd z_next =
        es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
    double primal = (x - z_next).norm();
    double dual = rho * (z_next - z).norm();
    u += x - z_next;
    z = z_next;
    if (primal < kResidualTol && dual < kResidualTol) {
      SDPResult res;
      res.x = z;
      res.value = inner(p.objective, z);
      res.iterations = iter;
      // lambda from the last affine projection estimates the equality
      // multipliers of max Tr(CX): y = rho * lambda.
      res.dual.resize(m);
      for (std::size_t i = 0; i < m; ++i) res.dual[i] = rho * lambda(i);
      return res;
    }
    // Standard residual balancing keeps the two residuals comparable; the
    // scaled dual variable u = y/rho must be rescaled with rho.
    if (primal > 10 * dual) {
      rho *= 2;
      u /= 2;
    } else if (dual > 10 * primal) {
      rho /= 2;
      u *= 2;
    }
  }
  throw SolverError("NoConvergence", "ADMM iteration cap of 50000 reached");
}

}  // namespace nctx
