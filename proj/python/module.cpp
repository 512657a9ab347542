// Python bindings for the nctx library. Exact rationals cross the boundary
// as strings ("p/q"), which python callers can hand to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "nctx/errors.hpp"
#include "nctx/invariants.hpp"
#include "nctx/json_io.hpp"
#include "nctx/library.hpp"
#include "nctx/models.hpp"
#include "nctx/nci.hpp"
#include "nctx/quantum.hpp"
#include "nctx/scenario.hpp"

namespace py = pybind11;

namespace {

nctx::Rational rat(const std::string& s) { return nctx::parse_rational(s); }

std::map<std::string, std::string> model_dict(const nctx::ProbModel& m) {
  std::map<std::string, std::string> out;
  for (const auto& [v, p] : m.probabilities) out[v] = nctx::to_string(p);
  return out;
}

nctx::ProbModel model_from_dict(const nctx::ContextualityScenario& s,
                                const std::map<std::string, std::string>& d) {
  std::map<nctx::VertexId, nctx::Rational> raw;
  for (const auto& [v, p] : d) raw[v] = rat(p);
  return nctx::check_model(s, raw);
}

nctx::RVector q_or_uniform(const std::vector<std::string>& q,
                           std::size_t edges) {
  if (q.empty()) return nctx::RVector(edges, nctx::Rational(1, edges));
  nctx::RVector out;
  for (const auto& s : q) out.push_back(rat(s));
  return out;
}

py::dict bundle_dict(const nctx::InvariantBundle& b) {
  py::dict d;
  d["alpha"] = nctx::to_string(b.alpha);
  d["theta"] = b.theta;
  d["alpha_star"] = nctx::to_string(b.alpha_star);
  d["beta"] = nctx::to_string(b.beta);
  py::list q;
  for (const auto& x : b.q_used) q.append(nctx::to_string(x));
  d["q"] = q;
  return d;
}

const char* witness_name(nctx::Witness w) {
  switch (w) {
    case nctx::Witness::Violation: return "Violation";
    case nctx::Witness::NoViolation: return "NoViolation";
    case nctx::Witness::TrivialBound: return "TrivialBound";
  }
  return "?";
}

py::dict report_dict(const nctx::NCIReport& r) {
  py::dict d;
  d["corr"] = r.corr;
  d["R"] = r.r_value;
  d["p0"] = r.p0;
  d["lhs_nci3"] = r.lhs_nci3;
  d["bound_corr"] = r.bound_nci1;
  d["bound_r"] = r.bound_nci2;
  d["verdict"] = witness_name(r.witness);
  d["invariants"] = bundle_dict(r.invariants);
  return d;
}

}  // namespace

PYBIND11_MODULE(pynctx, m) {
  m.doc() = "Contextuality scenarios, their model classes, graph invariants, "
            "and noise-robust noncontextuality inequalities";

  py::register_exception<nctx::ValidationError>(m, "NctxValidationError");
  py::register_exception<nctx::SolverError>(m, "NctxSolverError");

  py::class_<nctx::ContextualityScenario>(m, "Scenario")
      .def_static("validate",
                  [](std::vector<std::string> v,
                     std::vector<std::vector<std::string>> e) {
                    return nctx::ContextualityScenario::validate(
                        std::move(v), std::move(e));
                  },
                  py::arg("vertices"), py::arg("hyperedges"))
      .def_static("from_json",
                  [](const std::string& t) { return nctx::scenario_from_json(t); })
      .def("to_json",
           [](const nctx::ContextualityScenario& s) {
             return nctx::scenario_to_json(s);
           })
      .def_property_readonly("vertices",
                             &nctx::ContextualityScenario::vertices)
      .def_property_readonly(
          "hyperedges",
          [](const nctx::ContextualityScenario& s) {
            std::vector<std::vector<std::string>> out;
            for (const auto& e : s.hyperedges())
              out.emplace_back(e.begin(), e.end());
            return out;
          })
      .def("__repr__", [](const nctx::ContextualityScenario& s) {
        return "<Scenario " + std::to_string(s.vertex_count()) + " vertices, " +
               std::to_string(s.edge_count()) + " hyperedges>";
      });

  m.def("library_scenario", &nctx::library_scenario, py::arg("name"));

  m.def("orthogonality_edges", [](const nctx::ContextualityScenario& s) {
    auto og = nctx::orthogonality_graph(s);
    std::vector<std::pair<std::string, std::string>> out(og.edges.begin(),
                                                         og.edges.end());
    return out;
  });

  m.def("maximal_cliques", [](const nctx::ContextualityScenario& s) {
    return nctx::maximal_cliques(nctx::orthogonality_graph(s));
  });

  m.def("structural_specker", [](const nctx::ContextualityScenario& s) {
    auto v = nctx::structural_specker_check(s);
    return py::make_tuple(v.holds, v.violating_clique);
  });

  m.def("specker_extension", &nctx::specker_extension);

  m.def("ks_colourable", [](const nctx::ContextualityScenario& s) {
    return nctx::ks_colourable(s).colourable;
  });

  m.def("enumerate_extremal_models", [](const nctx::ContextualityScenario& s) {
    auto verts = nctx::enumerate_vertices(nctx::model_polytope(s));
    auto part = nctx::classify_extremal(s, verts);
    std::vector<std::map<std::string, std::string>> det, ind;
    for (const auto& x : part.deterministic) det.push_back(model_dict(x));
    for (const auto& x : part.indeterministic) ind.push_back(model_dict(x));
    return py::make_tuple(det, ind);
  });

  m.def("in_classical",
        [](const nctx::ContextualityScenario& s,
           const std::map<std::string, std::string>& d) {
          return nctx::in_classical(s, model_from_dict(s, d)).classical;
        });

  m.def("in_ce1", [](const nctx::ContextualityScenario& s,
                     const std::map<std::string, std::string>& d) {
    auto v = nctx::in_ce1(s, model_from_dict(s, d));
    return py::make_tuple(v.holds, v.violating_clique);
  });

  m.def("max_expression",
        [](const nctx::ContextualityScenario& s,
           const std::map<std::string, std::string>& weights,
           const std::string& klass) {
          std::map<nctx::VertexId, nctx::Rational> w;
          for (const auto& [v, x] : weights) w[v] = rat(x);
          nctx::ModelClassKind k;
          if (klass == "C") k = nctx::ModelClassKind::C;
          else if (klass == "CE1") k = nctx::ModelClassKind::CE1;
          else if (klass == "G") k = nctx::ModelClassKind::G;
          else throw nctx::ValidationError("BadParameter",
                                           "class must be C, CE1, or G");
          return nctx::to_string(nctx::max_expression(s, w, k));
        },
        py::arg("scenario"), py::arg("weights"), py::arg("model_class"));

  m.def("invariant_bundle",
        [](const std::string& graph_json,
           const nctx::ContextualityScenario& gamma_g,
           const std::vector<std::string>& q) {
          auto g = nctx::weighted_graph_from_json(graph_json);
          return bundle_dict(nctx::invariant_bundle(
              g, gamma_g, q_or_uniform(q, gamma_g.edge_count())));
        },
        py::arg("graph_json"), py::arg("gamma_g"),
        py::arg("q") = std::vector<std::string>{});

  m.def("kcbs_report", [](double r1, double r2) {
    auto k = nctx::kcbs_realization(r1, r2);
    auto table = nctx::born_table(k.gamma_g, k.realization);
    nctx::RVector q(k.gamma_g.edge_count(),
                    nctx::Rational(1, k.gamma_g.edge_count()));
    auto inv = nctx::invariant_bundle(k.g, k.gamma_g, q);
    auto rep = nctx::evaluate_nci(nctx::compute_corr(table, q).value,
                                  nctx::compute_r(table, k.g).value,
                                  table.p0, inv);
    return report_dict(rep);
  }, py::arg("r1") = 1.0, py::arg("r2") = 1.0);

  m.def("kcbs_threshold", [] {
    auto t = nctx::violation_threshold_kcbs();
    py::dict d;
    d["r_product"] = t.r_product;
    d["corr_threshold"] = t.corr_threshold;
    d["symbolic"] = t.symbolic;
    return d;
  });

  m.def("fcf_bound", [] {
    auto b = nctx::fcf_bound();
    std::vector<std::string> v;
    for (const auto& x : b.achieving_vertex) v.push_back(nctx::to_string(x));
    return py::make_tuple(nctx::to_string(b.value), v);
  });

  m.def("fcf_corr", [] { return nctx::fcf_corr(nctx::fcf_realization()); });

  m.def("certify_trivial_povm",
        [](const nctx::ContextualityScenario& gamma_g,
           const std::map<std::string, std::string>& model,
           const std::string& graph_json, const std::vector<std::string>& q) {
          auto g = nctx::weighted_graph_from_json(graph_json);
          auto cert = nctx::certify_trivial_povm(
              gamma_g, model_from_dict(gamma_g, model), g,
              q_or_uniform(q, gamma_g.edge_count()));
          py::dict d;
          d["pr_det"] = nctx::to_string(cert.pr_det);
          d["pr_ind"] = nctx::to_string(cert.pr_ind);
          d["corr_bound"] = nctx::to_string(cert.corr_bound);
          d["r_bound"] = nctx::to_string(cert.r_bound);
          d["no_violation"] = cert.no_violation;
          return d;
        },
        py::arg("gamma_g"), py::arg("model"), py::arg("graph_json"),
        py::arg("q") = std::vector<std::string>{});
}
