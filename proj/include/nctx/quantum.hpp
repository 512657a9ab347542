#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nctx/models.hpp"
#include "nctx/scenario.hpp"

namespace nctx {

using Operator = Eigen::MatrixXcd;

// Hilbert-space realization of a measurement-events scenario with paired
// sources. Outcome order everywhere is the sorted vertex order of each
// hyperedge (the order scenario hyperedges iterate in).
struct QuantumRealization {
  Eigen::Index dim = 0;
  std::map<VertexId, Operator> effects;
  // sources[i][k] = (state, prior) for outcome k of the source paired with
  // hyperedge i.
  std::vector<std::vector<std::pair<Operator, double>>> sources;
  // The distinguished two-outcome star source (s = 0, s = 1).
  std::vector<std::pair<Operator, double>> star;

  // Exact data carried by trivial-POVM realizations (effect = scalar * I),
  // letting the data table stay rational.
  std::optional<std::map<VertexId, Rational>> trivial_scalars;
  std::optional<RMatrix> priors_exact;  // per edge, aligned with sources
  std::optional<std::pair<Rational, Rational>> star_priors_exact;
};

// Joint operational probabilities for each paired (measurement, source)
// setting, plus the star-source row used by R and p0.
struct DataTable {
  std::vector<std::vector<VertexId>> edge_order;  // outcome order per edge
  std::vector<Eigen::MatrixXd> joint;  // joint[e](m, s) = p(m, s | M_e, S_e)
  std::map<VertexId, double> star_row;  // p(v | S_*, s_* = 0)
  double p0 = 0.0;                      // p(s_* = 0 | S_*)

  std::optional<std::vector<RMatrix>> joint_exact;
  std::optional<std::map<VertexId, Rational>> star_row_exact;
  std::optional<Rational> p0_exact;
};

// Checks every invariant of the realization against the scenario: effect
// positivity and completeness per hyperedge, state positivity and unit
// trace, prior normalization, and the cross-setting operational equivalence
// of the average source states. Throws InvariantViolation naming the check
// and its residual.
void validate_realization(const ContextualityScenario& s,
                          const QuantumRealization& r);

// Born-rule table: p(m, s | M_e, S_e) = Tr(rho_s E_m) * prior(s).
DataTable born_table(const ContextualityScenario& s,
                     const QuantumRealization& r);

// Depolarizing channel r * id + (1 - r) * (I/d) Tr, and its adjoint acting
// on effects. Throws BadParameter for r outside [0, 1].
Operator depolarize_state(const Operator& rho, double r);
Operator depolarize_effect(const Operator& e, double r);

struct KcbsRealization {
  ContextualityScenario gamma_g;
  WeightedGraph g;  // the odd-cycle subgraph carrying the expression
  QuantumRealization realization;
};

// The qutrit odd-cycle realization with source noise r1 and measurement
// noise r2 (depolarizing on both sides).
KcbsRealization kcbs_realization(double r1, double r2);

// The qubit trine construction: three binary measurements and three binary
// sources with Bloch vectors at 120 degrees. Standalone (its operational
// equivalences are mixtures of settings, not hyperedge completeness).
struct TrineRealization {
  std::vector<Operator> effects0;  // Pi^0_i for each measurement
  std::vector<std::vector<std::pair<Operator, double>>> sources;
};

TrineRealization fcf_realization();

// Correlation of the trine construction: (1/3) sum_i sum_s p(m=s, s | i).
double fcf_corr(const TrineRealization& t);

// Effects p(v) * I with uniform-prior maximally mixed sources; exact fields
// populated. star_p0 sets the prior of the star outcome s = 0.
QuantumRealization trivial_povm_realization(const ContextualityScenario& s,
                                            const ProbModel& m,
                                            const Rational& star_p0,
                                            Eigen::Index dim = 2);

struct CorrValue {
  double value = 0.0;
  std::optional<Rational> exact;
};

// Corr = sum_e q_e sum_m p(m, m | M_e, S_e); exact when the table is.
CorrValue compute_corr(const DataTable& t, const RVector& q);

// R = sum_{v in V(G)} w_v p(v | S_*, s_* = 0).
CorrValue compute_r(const DataTable& t, const WeightedGraph& g);

// CSV with columns (hyperedge, m, s, probability) and a star-source section;
// 12 significant digits.
std::string data_table_csv(const DataTable& t);

}  // namespace nctx
