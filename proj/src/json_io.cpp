#include "nctx/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nctx {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ValidationError("BadJson", "input is not valid JSON");
  return j;
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    // Decimal literal: round-trip through its shortest text form so common
    // inputs like 0.25 stay exact.
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return parse_rational(os.str());
  }
  throw ValidationError("BadRational", "expected a number or \"p/q\" string");
}

std::pair<std::vector<VertexId>, std::vector<std::vector<VertexId>>>
raw_scenario(const json& j) {
  if (!j.contains("vertices") || !j.contains("hyperedges"))
    throw ValidationError("BadJson",
                          "scenario needs 'vertices' and 'hyperedges'");
  std::vector<VertexId> verts = j.at("vertices").get<std::vector<VertexId>>();
  auto edges =
      j.at("hyperedges").get<std::vector<std::vector<VertexId>>>();
  return {std::move(verts), std::move(edges)};
}

}  // namespace

ContextualityScenario scenario_from_json(const std::string& text) {
  auto [verts, edges] = raw_scenario(parse(text));
  return ContextualityScenario::validate(std::move(verts), std::move(edges));
}

std::string scenario_to_json(const ContextualityScenario& s) {
  json j;
  j["vertices"] = s.vertices();
  json edges = json::array();
  for (const auto& e : s.hyperedges())
    edges.push_back(std::vector<VertexId>(e.begin(), e.end()));
  j["hyperedges"] = edges;
  return j.dump(2) + "\n";
}

WeightedGraph weighted_graph_from_json(const std::string& text) {
  json j = parse(text);
  auto [verts, edges] = raw_scenario(j);
  auto scenario =
      ContextualityScenario::validate(std::move(verts), std::move(edges));
  if (!j.contains("weights"))
    throw ValidationError("BadJson", "weighted graph needs 'weights'");
  std::map<VertexId, Rational> w;
  for (const auto& [key, value] : j.at("weights").items())
    w[key] = rational_from_json(value);

  OrthoGraph full = orthogonality_graph(scenario);
  OrthoGraph sub;
  for (const auto& v : full.vertices)
    if (w.count(v)) sub.vertices.push_back(v);
  for (const auto& e : full.edges)
    if (w.count(e.first) && w.count(e.second)) sub.edges.insert(e);
  for (const auto& [v, weight] : w)
    if (!scenario.has_vertex(v))
      throw ValidationError("DanglingVertex",
                            "weight on unknown vertex '" + v + "'");
  return WeightedGraph::make(std::move(sub), std::move(w));
}

ModelFile model_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("scenario") || !j.contains("probabilities"))
    throw ValidationError("BadJson",
                          "model needs 'scenario' and 'probabilities'");
  ModelFile m;
  m.scenario_ref = j.at("scenario").get<std::string>();
  for (const auto& [key, value] : j.at("probabilities").items())
    m.probabilities[key] = rational_from_json(value);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ValidationError("FileNotFound", "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace nctx
