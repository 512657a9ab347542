#pragma once

#include <string>
#include <vector>

#include "nctx/invariants.hpp"
#include "nctx/quantum.hpp"

namespace nctx {

enum class Witness { Violation, NoViolation, TrivialBound };

struct NCIConditions {
  bool p0_positive = false;
  bool beta_below_one = false;
  bool r_above_alpha = false;
  bool corr_above_floor = false;  // Corr > 1 - p0 (1 - beta)
};

struct NCIReport {
  double corr = 0.0;
  double r_value = 0.0;
  double p0 = 0.0;
  InvariantBundle invariants;
  double lhs_nci3 = 0.0;   // Corr + p0 (1-beta) (R-alpha)/(alpha*-alpha)
  double bound_nci1 = 0.0; // upper bound on Corr
  double bound_nci2 = 0.0; // upper bound on R
  Witness witness = Witness::NoViolation;
  NCIConditions conditions;
};

// Evaluates the three equivalent inequality forms. Throws
// DegenerateInvariants when alpha* = alpha. The bound is non-strict:
// lhs = 1 exactly is NoViolation. beta >= 1 yields TrivialBound.
NCIReport evaluate_nci(double corr, double r_value, double p0,
                       const InvariantBundle& inv);

struct KcbsThreshold {
  double r_product = 0.0;       // threshold on r1 r2
  double corr_threshold = 0.0;  // matching threshold on Corr
  std::string symbolic;         // exact expression as text
};

KcbsThreshold violation_threshold_kcbs();

struct FcfBound {
  Rational value;           // 5/6
  RVector achieving_vertex; // response assignment (xi_1, xi_2, xi_3)
};

// Maximizes (1/3) sum_i max(xi_i, 1 - xi_i) over the polytope
// {xi in [0,1]^3, sum xi = 3/2} by exact vertex enumeration.
FcfBound fcf_bound();

struct TrivialPovmCertificate {
  Rational pr_det;       // weight of the deterministic part
  Rational pr_ind;       // weight of the indeterministic part
  Rational corr_bound;   // Pr(det) + Pr(ind) * beta
  Rational r_bound;      // Pr(det) * alpha + Pr(ind) * alpha*
  std::vector<Witness> verdicts;  // at p0 in {0, 1/4, 1/2, 3/4, 1}
  bool no_violation = true;
};

// Decomposes m over the extremal models of gamma_g (exact LP), forms the
// class-wise bounds on Corr and R, and checks that the inequality cannot be
// violated at those bounds for any star prior.
TrivialPovmCertificate certify_trivial_povm(
    const ContextualityScenario& gamma_g, const ProbModel& m,
    const WeightedGraph& g, const RVector& q);

// Residual of the saturation identity:
// (alpha*-alpha) Corr + p0 (1-beta) R - [(alpha*-alpha) + p0 alpha (1-beta)].
// Zero exactly on the boundary of the inequality.
double saturation_ledger(const NCIReport& report);

std::string nci_report_json(const NCIReport& report);

}  // namespace nctx
