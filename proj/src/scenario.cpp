#include "nctx/scenario.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace nctx {

namespace {
constexpr std::size_t kCliqueGuard = 64;

std::string join(const std::vector<VertexId>& ids, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << sep;
    out << ids[i];
  }
  return out.str();
}
}  // namespace

ContextualityScenario ContextualityScenario::validate(
    std::vector<VertexId> vertices, std::vector<std::vector<VertexId>> hyperedges) {
  ContextualityScenario s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!s.index_.emplace(vertices[i], i).second)
      throw ValidationError("DuplicateVertexId", vertices[i]);
  }
  s.vertices_ = std::move(vertices);

  std::set<VertexSet> seen;
  VertexSet covered;
  for (const auto& raw : hyperedges) {
    if (raw.empty()) throw ValidationError("EmptyHyperedge", "hyperedge with no vertices");
    VertexSet e;
    for (const auto& v : raw) {
      if (!s.index_.count(v))
        throw ValidationError("DanglingVertex", "hyperedge vertex '" + v + "' not declared");
      if (!e.insert(v).second)
        throw ValidationError("DuplicateVertexId", "vertex '" + v + "' repeated in a hyperedge");
    }
    if (!seen.insert(e).second)
      throw ValidationError("SpernerViolation",
                            "duplicate hyperedge {" + join(raw) + "}");
    covered.insert(e.begin(), e.end());
    s.hyperedges_.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < s.hyperedges_.size(); ++i) {
    for (std::size_t j = 0; j < s.hyperedges_.size(); ++j) {
      if (i == j) continue;
      const auto& a = s.hyperedges_[i];
      const auto& b = s.hyperedges_[j];
      if (a.size() < b.size() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        std::vector<VertexId> av(a.begin(), a.end()), bv(b.begin(), b.end());
        throw ValidationError("SpernerViolation", "{" + join(av) + "} is a strict subset of {" +
                                                      join(bv) + "}");
      }
    }
  }
  for (const auto& v : s.vertices_) {
    if (!covered.count(v))
      throw ValidationError("DanglingVertex", "vertex '" + v + "' lies in no hyperedge");
  }
  return s;
}

std::size_t ContextualityScenario::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw ValidationError("DanglingVertex", "unknown vertex '" + v + "'");
  return it->second;
}

bool OrthoGraph::adjacent(const VertexId& a, const VertexId& b) const {
  if (a == b) return false;
  return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) != 0;
}

WeightedGraph WeightedGraph::make(OrthoGraph g, std::map<VertexId, Rational> w) {
  for (const auto& v : g.vertices) {
    auto it = w.find(v);
    if (it == w.end() || it->second <= 0)
      throw ValidationError("NonPositiveWeight", "vertex '" + v + "' needs a positive weight");
  }
  if (w.size() != g.vertices.size())
    throw ValidationError("DanglingVertex", "weight given for a vertex outside the graph");
  return WeightedGraph{std::move(g), std::move(w)};
}

std::size_t SourceScenario::event_count() const {
  std::size_t n = star_edge.size();
  for (const auto& e : source_hyperedges) n += e.size();
  return n;
}

OrthoGraph orthogonality_graph(const ContextualityScenario& s) {
  OrthoGraph g;
  g.vertices = s.vertices();
  for (const auto& e : s.hyperedges()) {
    for (auto it = e.begin(); it != e.end(); ++it) {
      for (auto jt = std::next(it); jt != e.end(); ++jt) {
        g.edges.insert(*it < *jt ? std::make_pair(*it, *jt) : std::make_pair(*jt, *it));
      }
    }
  }
  return g;
}

namespace {

// Bron-Kerbosch with pivoting over <=64-vertex bitsets.
void bron_kerbosch(uint64_t r, uint64_t p, uint64_t x,
                   const std::vector<uint64_t>& adj, std::vector<uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (uint64_t m = px; m;) {
    int u = std::countr_zero(m);
    m &= m - 1;
    int deg = std::popcount(p & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  uint64_t candidates = p & ~adj[pivot];
  for (uint64_t m = candidates; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    uint64_t bit = uint64_t(1) << v;
    bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(const OrthoGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n > kCliqueGuard)
    throw ValidationError("TooLarge", "clique enumeration capped at 64 vertices");
  if (n == 0) return {};
  std::map<VertexId, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx[g.vertices[i]] = int(i);
  std::vector<uint64_t> adj(n, 0);
  for (const auto& [a, b] : g.edges) {
    int i = idx.at(a), j = idx.at(b);
    adj[i] |= uint64_t(1) << j;
    adj[j] |= uint64_t(1) << i;
  }
  std::vector<uint64_t> masks;
  uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  bron_kerbosch(0, all, 0, adj, masks);

  std::vector<std::vector<VertexId>> cliques;
  cliques.reserve(masks.size());
  for (uint64_t m : masks) {
    std::vector<VertexId> c;
    for (uint64_t t = m; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      c.push_back(g.vertices[v]);
    }
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

SpeckerVerdict structural_specker_check(const ContextualityScenario& s) {
  auto cliques = maximal_cliques(orthogonality_graph(s));
  for (const auto& c : cliques) {
    bool inside = false;
    for (const auto& e : s.hyperedges()) {
      if (std::includes(e.begin(), e.end(), c.begin(), c.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return SpeckerVerdict{false, c};
  }
  return SpeckerVerdict{true, {}};
}

VertexId no_detection_id(const std::vector<VertexId>& clique) {
  std::vector<VertexId> sorted(clique.begin(), clique.end());
  std::sort(sorted.begin(), sorted.end());
  return "nd:" + join(sorted, "+");
}

ContextualityScenario specker_extension(const ContextualityScenario& s) {
  auto cliques = maximal_cliques(orthogonality_graph(s));
  std::vector<VertexId> vertices = s.vertices();
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : s.hyperedges()) edges.emplace_back(e.begin(), e.end());
  for (const auto& c : cliques) {
    VertexSet cs(c.begin(), c.end());
    bool is_edge = false;
    for (const auto& e : s.hyperedges()) {
      if (e == cs) {
        is_edge = true;
        break;
      }
    }
    if (is_edge) continue;
    VertexId nd = no_detection_id(c);
    vertices.push_back(nd);
    std::vector<VertexId> edge(c);
    edge.push_back(nd);
    edges.push_back(std::move(edge));
  }
  return ContextualityScenario::validate(std::move(vertices), std::move(edges));
}

GammaG build_gamma_g(const WeightedGraph& g) {
  auto cliques = maximal_cliques(g.graph);
  std::vector<VertexId> vertices = g.graph.vertices;
  std::map<VertexId, VertexRole> roles;
  for (const auto& v : g.graph.vertices) roles[v] = VertexRole::Event;
  std::vector<std::vector<VertexId>> edges;
  for (const auto& c : cliques) {
    VertexId nd = no_detection_id(c);
    vertices.push_back(nd);
    roles[nd] = VertexRole::NoDetection;
    std::vector<VertexId> edge(c);
    edge.push_back(nd);
    edges.push_back(std::move(edge));
  }
  return GammaG{
      ContextualityScenario::validate(std::move(vertices), std::move(edges)),
      std::move(roles)};
}

SourceScenario build_sigma_g(const ContextualityScenario& gamma_g) {
  SourceScenario sigma;
  for (std::size_t i = 0; i < gamma_g.hyperedges().size(); ++i) {
    // A source setting carries one source event per vertex of the paired
    // measurement scenario (events outside the hyperedge occur with
    // probability zero, but they are still part of the outcome set).
    std::vector<VertexId> src;
    for (const auto& v : gamma_g.vertices())
      src.push_back("s[" + v + "|S" + std::to_string(i) + "]");
    sigma.source_hyperedges.push_back(std::move(src));
  }
  sigma.star_edge = {"s[0|S*]", "s[1|S*]"};
  return sigma;
}

}  // namespace nctx
