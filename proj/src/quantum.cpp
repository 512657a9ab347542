#include "nctx/quantum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nctx {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-9;

double herm_residual(const Operator& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (a + a.adjoint()));
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (a + a.adjoint()));
  return es.eigenvalues().maxCoeff();
}

[[noreturn]] void fail(const std::string& check, double residual) {
  std::ostringstream os;
  os << check << " (residual " << residual << ")";
  throw ValidationError("InvariantViolation", os.str());
}

std::vector<VertexId> edge_vertices(const VertexSet& e) {
  return {e.begin(), e.end()};
}

}  // namespace

void validate_realization(const ContextualityScenario& s,
                          const QuantumRealization& r) {
  const Eigen::Index d = r.dim;
  if (d <= 0 || d > 16)
    throw ValidationError("BadParameter", "dimension must be in 1..16");
  Operator id = Operator::Identity(d, d);

  for (const auto& v : s.vertices()) {
    auto it = r.effects.find(v);
    if (it == r.effects.end())
      fail("missing effect for vertex " + v, 0.0);
    const Operator& e = it->second;
    if (e.rows() != d || e.cols() != d)
      fail("effect dimension mismatch at " + v, 0.0);
    if (double h = herm_residual(e); h > kHermTol)
      fail("effect not Hermitian at " + v, h);
    if (double lo = min_eigenvalue(e); lo < -kPsdTol)
      fail("effect not positive at " + v, lo);
    if (double hi = max_eigenvalue(e); hi > 1 + kPsdTol)
      fail("effect exceeds identity at " + v, hi - 1);
  }
  if (r.sources.size() != s.edge_count())
    fail("source setting count mismatch", 0.0);

  Operator reference_avg;
  auto check_setting =
      [&](const std::vector<std::pair<Operator, double>>& setting,
          const std::string& label) {
        double prior_sum = 0.0;
        Operator avg = Operator::Zero(d, d);
        for (const auto& [rho, prior] : setting) {
          if (double h = herm_residual(rho); h > kHermTol)
            fail("state not Hermitian in " + label, h);
          if (double lo = min_eigenvalue(rho); lo < -kPsdTol)
            fail("state not positive in " + label, lo);
          if (double tr = std::abs(rho.trace().real() - 1.0); tr > kHermTol)
            fail("state trace not 1 in " + label, tr);
          prior_sum += prior;
          avg += prior * rho;
        }
        if (std::abs(prior_sum - 1.0) > kPsdTol)
          fail("priors do not sum to 1 in " + label, prior_sum - 1.0);
        if (reference_avg.size() == 0) {
          reference_avg = avg;
        } else if (double dev = (avg - reference_avg).cwiseAbs().maxCoeff();
                   dev > kPsdTol) {
          fail("coarse-grained source differs in " + label, dev);
        }
      };

  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    auto vs = edge_vertices(s.hyperedges()[i]);
    if (r.sources[i].size() != vs.size())
      fail("source outcome count mismatch at edge " + std::to_string(i), 0.0);
    Operator sum = Operator::Zero(d, d);
    for (const auto& v : vs) sum += r.effects.at(v);
    if (double dev = (sum - id).cwiseAbs().maxCoeff(); dev > kPsdTol)
      fail("effects of edge " + std::to_string(i) + " do not sum to identity",
           dev);
    check_setting(r.sources[i], "source setting " + std::to_string(i));
  }
  if (r.star.size() != 2) fail("star source must have two outcomes", 0.0);
  check_setting(r.star, "star source");
}

DataTable born_table(const ContextualityScenario& s,
                     const QuantumRealization& r) {
  validate_realization(s, r);
  DataTable t;
  const bool exact = r.trivial_scalars && r.priors_exact &&
                     r.star_priors_exact;
  if (exact) {
    t.joint_exact.emplace();
    t.star_row_exact.emplace();
  }
  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    auto vs = edge_vertices(s.hyperedges()[i]);
    const std::size_t ne = vs.size();
    Eigen::MatrixXd joint(ne, ne);
    RMatrix joint_x(ne, RVector(ne, 0));
    for (std::size_t m = 0; m < ne; ++m) {
      for (std::size_t k = 0; k < ne; ++k) {
        const auto& [rho, prior] = r.sources[i][k];
        std::complex<double> tr = (rho * r.effects.at(vs[m])).trace();
        if (std::abs(tr.imag()) > 1e-12)
          fail("complex Born probability", tr.imag());
        double p = tr.real() * prior;
        // Clamp tiny negative round-off.
        if (p < 0 && p > -1e-12) p = 0;
        joint(m, k) = p;
        if (exact)
          joint_x[m][k] = r.trivial_scalars->at(vs[m]) * (*r.priors_exact)[i][k];
      }
    }
    t.edge_order.push_back(vs);
    t.joint.push_back(std::move(joint));
    if (exact) t.joint_exact->push_back(std::move(joint_x));
  }
  t.p0 = r.star[0].second;
  for (const auto& v : s.vertices()) {
    std::complex<double> tr = (r.star[0].first * r.effects.at(v)).trace();
    t.star_row[v] = tr.real();
    if (exact) (*t.star_row_exact)[v] = r.trivial_scalars->at(v);
  }
  if (exact) t.p0_exact = r.star_priors_exact->first;
  return t;
}

Operator depolarize_state(const Operator& rho, double r) {
  if (r < 0 || r > 1)
    throw ValidationError("BadParameter", "depolarizing r outside [0,1]");
  const Eigen::Index d = rho.rows();
  return r * rho + (1 - r) * rho.trace() *
                       Operator::Identity(d, d) / static_cast<double>(d);
}

Operator depolarize_effect(const Operator& e, double r) {
  if (r < 0 || r > 1)
    throw ValidationError("BadParameter", "depolarizing r outside [0,1]");
  const Eigen::Index d = e.rows();
  return r * e +
         (1 - r) * e.trace() * Operator::Identity(d, d) / static_cast<double>(d);
}

KcbsRealization kcbs_realization(double r1, double r2) {
  if (r1 < 0 || r1 > 1 || r2 < 0 || r2 > 1)
    throw ValidationError("BadParameter", "noise parameters outside [0,1]");
  const double pi = std::numbers::pi;
  const double ct = std::pow(5.0, -0.25);
  const double st = std::sqrt(1.0 - ct * ct);

  // Odd-cycle vectors: adjacent pairs orthogonal.
  std::vector<Eigen::Vector3cd> l(5);
  for (int i = 0; i < 5; ++i) {
    double phi = 4.0 * pi * i / 5.0;
    l[i] << st * std::cos(phi), st * std::sin(phi), ct;
  }
  std::vector<Operator> proj(5);
  for (int i = 0; i < 5; ++i) proj[i] = l[i] * l[i].adjoint();

  // Vertex ids sort as u0..u4 then the per-edge no-detection events; edge
  // e_i = {u_i, u_{i+1}, nd_i} with sorted outcome order (nd first).
  std::vector<VertexId> event(5), nodet(5);
  for (int i = 0; i < 5; ++i) {
    event[i] = "u" + std::to_string(i);
    nodet[i] = "nd" + std::to_string(i);
  }
  std::vector<VertexId> verts;
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < 5; ++i) verts.push_back(event[i]);
  for (int i = 0; i < 5; ++i) verts.push_back(nodet[i]);
  for (int i = 0; i < 5; ++i)
    edges.push_back({event[i], event[(i + 1) % 5], nodet[i]});
  auto gamma_g = ContextualityScenario::validate(verts, edges);

  OrthoGraph g5;
  g5.vertices = event;
  for (int i = 0; i < 5; ++i) {
    VertexId a = event[i], b = event[(i + 1) % 5];
    g5.edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::map<VertexId, Rational> unit;
  for (const auto& v : event) unit[v] = 1;
  auto g = WeightedGraph::make(g5, unit);

  QuantumRealization r;
  r.dim = 3;
  Operator id = Operator::Identity(3, 3);
  for (int i = 0; i < 5; ++i) {
    r.effects[event[i]] = depolarize_effect(proj[i], r2);
    r.effects[nodet[i]] =
        depolarize_effect(id - proj[i] - proj[(i + 1) % 5], r2);
  }
  // Source of edge i mirrors its outcomes in sorted vertex order.
  for (std::size_t ei = 0; ei < gamma_g.edge_count(); ++ei) {
    std::vector<std::pair<Operator, double>> setting;
    for (const auto& v : gamma_g.hyperedges()[ei]) {
      Operator raw;
      int i = static_cast<int>(ei);
      if (v == event[i])
        raw = proj[i];
      else if (v == event[(i + 1) % 5])
        raw = proj[(i + 1) % 5];
      else
        raw = id - proj[i] - proj[(i + 1) % 5];
      setting.emplace_back(depolarize_state(raw, r1), 1.0 / 3.0);
    }
    r.sources.push_back(std::move(setting));
  }
  Eigen::Vector3cd psi;
  psi << 0, 0, 1;
  Operator psi_proj = psi * psi.adjoint();
  r.star.emplace_back(depolarize_state(psi_proj, r1), 1.0 / 3.0);
  r.star.emplace_back(depolarize_state((id - psi_proj) / 2.0, r1), 2.0 / 3.0);

  return {std::move(gamma_g), std::move(g), std::move(r)};
}

TrineRealization fcf_realization() {
  const double s3 = std::sqrt(3.0);
  std::vector<Eigen::Vector3d> bloch = {
      {0, 0, 1}, {s3 / 2, 0, -0.5}, {-s3 / 2, 0, -0.5}};
  Operator sx(2, 2), sy(2, 2), sz(2, 2), id = Operator::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  sz << 1, 0, 0, -1;
  auto from_bloch = [&](const Eigen::Vector3d& n) {
    return 0.5 * (id + n.x() * sx + n.y() * sy + n.z() * sz);
  };
  TrineRealization t;
  for (const auto& n : bloch) {
    t.effects0.push_back(from_bloch(n));
    t.sources.push_back({{from_bloch(n), 0.5},
                         {from_bloch(Eigen::Vector3d(-n)), 0.5}});
  }
  return t;
}

double fcf_corr(const TrineRealization& t) {
  Operator id = Operator::Identity(2, 2);
  double corr = 0.0;
  for (std::size_t i = 0; i < t.effects0.size(); ++i) {
    const Operator& e0 = t.effects0[i];
    Operator e1 = id - e0;
    corr += t.sources[i][0].second * (t.sources[i][0].first * e0).trace().real();
    corr += t.sources[i][1].second * (t.sources[i][1].first * e1).trace().real();
  }
  return corr / static_cast<double>(t.effects0.size());
}

QuantumRealization trivial_povm_realization(const ContextualityScenario& s,
                                            const ProbModel& m,
                                            const Rational& star_p0,
                                            Eigen::Index dim) {
  if (star_p0 < 0 || star_p0 > 1)
    throw ValidationError("BadParameter", "star prior outside [0,1]");
  QuantumRealization r;
  r.dim = dim;
  Operator id = Operator::Identity(dim, dim);
  Operator mixed = id / static_cast<double>(dim);
  r.trivial_scalars.emplace();
  for (const auto& v : s.vertices()) {
    const Rational& p = m.probabilities.at(v);
    r.effects[v] = to_double(p) * id;
    (*r.trivial_scalars)[v] = p;
  }
  r.priors_exact.emplace();
  for (const auto& e : s.hyperedges()) {
    std::vector<std::pair<Operator, double>> setting;
    RVector priors;
    Rational uniform(1, static_cast<unsigned>(e.size()));
    for (std::size_t k = 0; k < e.size(); ++k) {
      setting.emplace_back(mixed, to_double(uniform));
      priors.push_back(uniform);
    }
    r.sources.push_back(std::move(setting));
    r.priors_exact->push_back(std::move(priors));
  }
  r.star.emplace_back(mixed, to_double(star_p0));
  r.star.emplace_back(mixed, to_double(1 - star_p0));
  r.star_priors_exact = {star_p0, 1 - star_p0};
  return r;
}

CorrValue compute_corr(const DataTable& t, const RVector& q) {
  if (q.size() != t.joint.size())
    throw ValidationError("MissingPairing",
                          "q must cover every table pairing");
  CorrValue out;
  for (std::size_t e = 0; e < q.size(); ++e) {
    double diag = t.joint[e].diagonal().sum();
    out.value += to_double(q[e]) * diag;
  }
  if (t.joint_exact) {
    Rational sum = 0;
    for (std::size_t e = 0; e < q.size(); ++e) {
      Rational diag = 0;
      for (std::size_t m = 0; m < (*t.joint_exact)[e].size(); ++m)
        diag += (*t.joint_exact)[e][m][m];
      sum += q[e] * diag;
    }
    out.exact = sum;
    out.value = to_double(sum);
  }
  return out;
}

CorrValue compute_r(const DataTable& t, const WeightedGraph& g) {
  if (t.star_row.empty())
    throw ValidationError("MissingStarSource", "table has no star-source row");
  CorrValue out;
  for (const auto& v : g.graph.vertices) {
    auto it = t.star_row.find(v);
    if (it == t.star_row.end())
      throw ValidationError("MissingStarSource",
                            "no star entry for vertex '" + v + "'");
    out.value += to_double(g.weights.at(v)) * it->second;
  }
  if (t.star_row_exact) {
    Rational sum = 0;
    for (const auto& v : g.graph.vertices)
      sum += g.weights.at(v) * t.star_row_exact->at(v);
    out.exact = sum;
    out.value = to_double(sum);
  }
  return out;
}

std::string data_table_csv(const DataTable& t) {
  std::ostringstream os;
  os.precision(12);
  os << "hyperedge,m,s,probability\n";
  for (std::size_t e = 0; e < t.joint.size(); ++e)
    for (Eigen::Index m = 0; m < t.joint[e].rows(); ++m)
      for (Eigen::Index s = 0; s < t.joint[e].cols(); ++s)
        os << e << ',' << t.edge_order[e][m] << ',' << t.edge_order[e][s]
           << ',' << t.joint[e](m, s) << '\n';
  os << "star,vertex,,p(v|star 0)\n";
  for (const auto& [v, p] : t.star_row)
    os << "star," << v << ",," << p << '\n';
  os << "star,p0,," << t.p0 << '\n';
  return os.str();
}

}  // namespace nctx
