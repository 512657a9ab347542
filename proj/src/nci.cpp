#include "nctx/nci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nctx/lp.hpp"
#include "nctx/polytope.hpp"

namespace nctx {

NCIReport evaluate_nci(double corr, double r_value, double p0,
                       const InvariantBundle& inv) {
  const double alpha = to_double(inv.alpha);
  const double alpha_star = to_double(inv.alpha_star);
  const double beta = to_double(inv.beta);
  if (inv.alpha_star == inv.alpha)
    throw ValidationError("DegenerateInvariants",
                          "alpha* equals alpha: inequality undefined");

  NCIReport rep;
  rep.corr = corr;
  rep.r_value = r_value;
  rep.p0 = p0;
  rep.invariants = inv;

  const double gap = alpha_star - alpha;
  rep.lhs_nci3 = corr + p0 * (1 - beta) * (r_value - alpha) / gap;
  rep.bound_nci1 = 1 - p0 * (1 - beta) * (r_value - alpha) / gap;
  const double denom = p0 * (1 - beta);
  rep.bound_nci2 = denom > 0
                       ? alpha + gap * (1 - corr) / denom
                       : std::numeric_limits<double>::infinity();

  rep.conditions.p0_positive = p0 > 0;
  rep.conditions.beta_below_one = inv.beta < 1;
  rep.conditions.r_above_alpha = r_value > alpha;
  rep.conditions.corr_above_floor = corr > 1 - p0 * (1 - beta);

  // The verdict is the inequality itself; the side conditions report when
  // the bound is a nontrivial witness. For operationally consistent inputs
  // (Corr <= 1, R <= alpha*) a strict left-hand side already implies them.
  if (!rep.conditions.beta_below_one) {
    rep.witness = Witness::TrivialBound;
  } else {
    rep.witness = rep.lhs_nci3 > 1 ? Witness::Violation : Witness::NoViolation;
  }
  return rep;
}

KcbsThreshold violation_threshold_kcbs() {
  const double s5 = std::sqrt(5.0);
  KcbsThreshold t;
  t.r_product = 1 - (s5 - 2) / (s5 + 1.0 / 3.0);
  t.corr_threshold = 1.0 / 3.0 + 2.0 / 3.0 * t.r_product;
  t.symbolic = "r1*r2 > 1 - (sqrt(5)-2)/(sqrt(5)+1/3)";
  return t;
}

FcfBound fcf_bound() {
  HRepPolytope p;
  p.num_vars = 3;
  p.eq_lhs.push_back({1, 1, 1});
  p.eq_rhs.push_back(Rational(3, 2));
  for (std::size_t i = 0; i < 3; ++i) {
    RVector lo(3, 0), hi(3, 0);
    lo[i] = -1;
    hi[i] = 1;
    p.le_lhs.push_back(lo);
    p.le_rhs.push_back(0);
    p.le_lhs.push_back(hi);
    p.le_rhs.push_back(1);
  }
  auto verts = enumerate_vertices(p);
  FcfBound best;
  best.value = -1;
  for (const auto& v : verts) {
    Rational val = 0;
    for (const auto& xi : v) val += std::max(xi, Rational(1 - xi));
    val /= 3;
    // Lexicographically greatest maximizer: deterministic tie-break among
    // the symmetric optima, landing on the (1, 1/2, 0) representative.
    if (val > best.value ||
        (val == best.value && v > best.achieving_vertex)) {
      best.value = val;
      best.achieving_vertex = v;
    }
  }
  return best;
}

TrivialPovmCertificate certify_trivial_povm(
    const ContextualityScenario& gamma_g, const ProbModel& m,
    const WeightedGraph& g, const RVector& q) {
  auto verts = enumerate_vertices(model_polytope(gamma_g));
  auto part = classify_extremal(gamma_g, verts);
  const std::size_t nd = part.deterministic.size();
  const std::size_t ni = part.indeterministic.size();
  const std::size_t n = gamma_g.vertex_count();

  // Exact convex decomposition of m over all extremal models.
  RationalLP lp;
  lp.num_vars = nd + ni;
  RVector target = point_from_model(gamma_g, m);
  for (std::size_t i = 0; i < n; ++i) {
    RVector row(nd + ni);
    for (std::size_t k = 0; k < nd; ++k)
      row[k] = part.deterministic[k].probabilities.at(gamma_g.vertices()[i]);
    for (std::size_t k = 0; k < ni; ++k)
      row[nd + k] =
          part.indeterministic[k].probabilities.at(gamma_g.vertices()[i]);
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(target[i]);
  }
  lp.eq_lhs.push_back(RVector(nd + ni, 1));
  lp.eq_rhs.push_back(1);
  lp.lower.assign(nd + ni, Rational(0));
  auto res = lp_feasible_point(lp);
  if (res.status != LPStatus::Optimal)
    throw SolverError("DecompositionFailure",
                      "valid model failed to decompose over extremal models");

  TrivialPovmCertificate cert;
  cert.pr_det = 0;
  cert.pr_ind = 0;
  for (std::size_t k = 0; k < nd; ++k) cert.pr_det += res.point[k];
  for (std::size_t k = 0; k < ni; ++k) cert.pr_ind += res.point[nd + k];

  Rational alpha = independence_number(g).value;
  Rational alpha_star = fractional_packing(g).value;
  Rational beta = 1;
  if (ni > 0)
    beta = weighted_max_predictability(gamma_g, q, part.indeterministic).value;

  cert.corr_bound = cert.pr_det + cert.pr_ind * beta;
  cert.r_bound = cert.pr_det * alpha + cert.pr_ind * alpha_star;

  // Exact-rational evaluation at the bounds. alpha* = alpha (even cycles)
  // leaves no room between the classical and general bounds, so the
  // inequality can never be violated there.
  const Rational gap = alpha_star - alpha;
  for (const Rational& p0 :
       {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
        Rational(1)}) {
    Witness w;
    if (beta >= 1) {
      w = Witness::TrivialBound;
    } else if (gap == 0) {
      w = Witness::NoViolation;
    } else {
      Rational lhs =
          cert.corr_bound + p0 * (1 - beta) * (cert.r_bound - alpha) / gap;
      w = lhs > 1 ? Witness::Violation : Witness::NoViolation;
    }
    cert.verdicts.push_back(w);
    if (w == Witness::Violation) cert.no_violation = false;
  }
  return cert;
}

double saturation_ledger(const NCIReport& report) {
  const double alpha = to_double(report.invariants.alpha);
  const double alpha_star = to_double(report.invariants.alpha_star);
  const double beta = to_double(report.invariants.beta);
  const double gap = alpha_star - alpha;
  return gap * report.corr + report.p0 * (1 - beta) * report.r_value -
         (gap + report.p0 * alpha * (1 - beta));
}

namespace {
const char* witness_name(Witness w) {
  switch (w) {
    case Witness::Violation:
      return "Violation";
    case Witness::NoViolation:
      return "NoViolation";
    default:
      return "TrivialBound";
  }
}
}  // namespace

std::string nci_report_json(const NCIReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "{\n"
     << "  \"corr\": " << r.corr << ",\n"
     << "  \"r_value\": " << r.r_value << ",\n"
     << "  \"p0\": " << r.p0 << ",\n"
     << "  \"alpha\": \"" << to_string(r.invariants.alpha) << "\",\n"
     << "  \"theta\": " << r.invariants.theta << ",\n"
     << "  \"alpha_star\": \"" << to_string(r.invariants.alpha_star)
     << "\",\n"
     << "  \"beta\": \"" << to_string(r.invariants.beta) << "\",\n"
     << "  \"lhs_nci3\": " << r.lhs_nci3 << ",\n"
     << "  \"bound_nci1\": " << r.bound_nci1 << ",\n"
     << "  \"bound_nci2\": ";
  if (std::isfinite(r.bound_nci2))
    os << r.bound_nci2;
  else
    os << "null";
  os << ",\n"
     << "  \"saturation_residual\": " << saturation_ledger(r) << ",\n"
     << "  \"witness\": \"" << witness_name(r.witness) << "\",\n"
     << "  \"conditions\": {\"p0_positive\": "
     << (r.conditions.p0_positive ? "true" : "false")
     << ", \"beta_below_one\": "
     << (r.conditions.beta_below_one ? "true" : "false")
     << ", \"r_above_alpha\": "
     << (r.conditions.r_above_alpha ? "true" : "false")
     << ", \"corr_above_floor\": "
     << (r.conditions.corr_above_floor ? "true" : "false") << "}\n"
     << "}\n";
  return os.str();
}

}  // namespace nctx
