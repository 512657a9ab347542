#include "nctx/library.hpp"

#include <array>

namespace nctx {

namespace {

WeightedGraph unit_cycle(std::size_t n, const std::string& prefix) {
  OrthoGraph g;
  std::map<VertexId, Rational> w;
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Zero-padded labels keep the sorted order equal to the cycle order.
    std::string num = std::to_string(i);
    if (n > 10 && num.size() < 2) num = "0" + num;
    ids[i] = prefix + num;
  }
  g.vertices = ids;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId a = ids[i], b = ids[(i + 1) % n];
    g.edges.insert({std::min(a, b), std::max(a, b)});
    w[ids[i]] = 1;
  }
  return WeightedGraph::make(std::move(g), std::move(w));
}

// Incidence structure of the standard 18-ray KS construction in dimension
// four: 9 bases of 4 rays, every ray in exactly two bases. Vertex labels
// r00..r17 follow the sorted order of the ray coordinates:
//  r00=(-1,1,1,1)  r01=(0,0,0,1)  r02=(0,0,1,0)   r03=(0,0,1,1)
//  r04=(0,1,-1,0)  r05=(0,1,0,-1) r06=(0,1,0,0)   r07=(1,-1,-1,1)
//  r08=(1,-1,0,0)  r09=(1,-1,1,-1) r10=(1,0,-1,0) r11=(1,0,0,-1)
//  r12=(1,0,0,1)   r13=(1,0,1,0)  r14=(1,1,-1,1)  r15=(1,1,0,0)
//  r16=(1,1,1,-1)  r17=(1,1,1,1)
constexpr std::array<std::array<int, 4>, 9> kCegaBases = {{
    {1, 2, 15, 8},    // (0001) (0010) (1100) (1-100)
    {1, 6, 13, 10},   // (0001) (0100) (1010) (10-10)
    {9, 7, 15, 3},    // (1-11-1) (1-1-11) (1100) (0011)
    {9, 17, 10, 5},   // (1-11-1) (1111) (10-10) (010-1)
    {2, 6, 12, 11},   // (0010) (0100) (1001) (100-1)
    {7, 17, 11, 4},   // (1-1-11) (1111) (100-1) (01-10)
    {14, 16, 8, 3},   // (11-11) (111-1) (1-100) (0011)
    {14, 0, 13, 5},   // (11-11) (-1111) (1010) (010-1)
    {16, 0, 12, 4},   // (111-1) (-1111) (1001) (01-10)
}};

VertexId ray_id(int i) {
  return "r" + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

VertexId cega_nd_id(int basis) { return "nd" + std::to_string(basis); }

}  // namespace

ContextualityScenario kcbs_gamma() {
  // Five four-outcome joint measurements; outcome (a,b) of measurement i is
  // the joint event for the pair of projectors tested by that measurement.
  std::vector<VertexId> verts;
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    std::vector<VertexId> e;
    for (const char* ab : {"00", "01", "10", "11"}) {
      VertexId v = "m" + std::to_string(i) + ":" + ab;
      verts.push_back(v);
      e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  return ContextualityScenario::validate(std::move(verts), std::move(edges));
}

WeightedGraph kcbs_g() { return unit_cycle(5, "u"); }

GammaG kcbs_gamma_g() { return build_gamma_g(kcbs_g()); }

WeightedGraph n_cycle(std::size_t n) {
  if (n < 3)
    throw ValidationError("BadParameter", "cycle needs at least 3 vertices");
  return unit_cycle(n, "u");
}

WeightedGraph chsh_4cycle() { return unit_cycle(4, "u"); }

ContextualityScenario cega_18() {
  std::vector<VertexId> verts;
  for (int i = 0; i < 18; ++i) verts.push_back(ray_id(i));
  std::vector<std::vector<VertexId>> edges;
  for (const auto& b : kCegaBases) {
    std::vector<VertexId> e;
    for (int i : b) e.push_back(ray_id(i));
    edges.push_back(std::move(e));
  }
  return ContextualityScenario::validate(std::move(verts), std::move(edges));
}

ContextualityScenario cega_27() {
  std::vector<VertexId> verts;
  for (int i = 0; i < 18; ++i) verts.push_back(ray_id(i));
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t b = 0; b < kCegaBases.size(); ++b) {
    std::vector<VertexId> e;
    for (int i : kCegaBases[b]) e.push_back(ray_id(i));
    VertexId nd = cega_nd_id(static_cast<int>(b));
    verts.push_back(nd);
    e.push_back(nd);
    edges.push_back(std::move(e));
  }
  return ContextualityScenario::validate(std::move(verts), std::move(edges));
}

std::vector<VertexId> cega_triangle() {
  // Lexicographically first maximal clique of the orthogonality graph that
  // is not a basis; pairwise co-occurring rays with no common basis.
  return {ray_id(0), ray_id(14), ray_id(16)};
}

std::map<VertexId, Rational> cega_expr1() {
  std::map<VertexId, Rational> w;
  for (int i = 0; i < 18; ++i) w[ray_id(i)] = 2;
  return w;
}

std::map<VertexId, Rational> cega_expr2() {
  std::map<VertexId, Rational> w;
  for (const auto& v : cega_triangle()) w[v] = 1;
  return w;
}

std::map<VertexId, Rational> cega_expr3() {
  auto w = cega_expr1();
  for (const auto& v : cega_triangle()) w[v] += 1;
  return w;
}

ContextualityScenario library_scenario(const std::string& name) {
  if (name == "kcbs_gamma") return kcbs_gamma();
  if (name == "kcbs_g" || name == "kcbs_gamma_g")
    return kcbs_gamma_g().scenario;
  if (name == "cega_18") return cega_18();
  if (name == "cega_27") return cega_27();
  if (name == "chsh_4cycle") return build_gamma_g(chsh_4cycle()).scenario;
  if (name.rfind("n_cycle(", 0) == 0 && name.back() == ')') {
    std::size_t n = std::stoul(name.substr(8, name.size() - 9));
    return build_gamma_g(n_cycle(n)).scenario;
  }
  throw ValidationError("UnknownName", "no library scenario named '" + name +
                                           "'");
}

}  // namespace nctx
