#include "mcl/graphs/stable_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace mcl {

StableGraph::StableGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges)
    : genera_(std::move(genera)), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count()) throw std::invalid_argument("StableGraph: edge endpoint out of range");
  }
}

int StableGraph::genus() const {
  return edge_count() - vertex_count() + 1 + std::accumulate(genera_.begin(), genera_.end(), 0);
}

int StableGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

int StableGraph::loops(int v) const {
  int l = 0;
  for (const auto& [a, b] : edges_) l += (a == v && b == v);
  return l;
}

int StableGraph::half_edge_vertex(int h) const {
  const auto& e = edges_.at(static_cast<std::size_t>(h / 2));
  return (h % 2 == 0) ? e.first : e.second;
}

std::vector<std::vector<int>> StableGraph::half_edges_at() const {
  std::vector<std::vector<int>> out(genera_.size());
  for (int h = 0; h < 2 * edge_count(); ++h) out[half_edge_vertex(h)].push_back(h);
  return out;
}

std::vector<std::vector<int>> StableGraph::adjacency() const {
  const auto n = genera_.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : edges_) {
    ++a[u][v];
    if (u != v) ++a[v][u];
  }
  return a;
}

bool StableGraph::connected() const {
  if (genera_.empty()) return false;
  std::vector<int> parent(genera_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges_) parent[find(u)] = find(v);
  const int root = find(0);
  for (int v = 1; v < vertex_count(); ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

bool StableGraph::stable() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (genera_[v] < 0 || 2 * genera_[v] - 2 + degree(v) <= 0) return false;
  }
  return true;
}

void StableGraph::validate() const {
  if (genera_.empty()) throw std::invalid_argument("StableGraph: no vertices");
  for (int g : genera_) {
    if (g < 0) throw std::invalid_argument("StableGraph: negative vertex genus");
  }
  if (!connected()) throw std::invalid_argument("StableGraph: not connected");
  if (!stable()) throw std::invalid_argument("StableGraph: unstable vertex");
  if (edges_.empty()) throw std::invalid_argument("StableGraph: no edges");
}

bool WeightedStableGraph::primitive() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](int m) { return m == 1; });
}

void WeightedStableGraph::validate() const {
  graph.validate();
  if (static_cast<int>(multiplicities.size()) != graph.edge_count()) {
    throw std::invalid_argument("WeightedStableGraph: one multiplicity per edge required");
  }
  for (int m : multiplicities) {
    if (m < 1) throw std::invalid_argument("WeightedStableGraph: multiplicities must be positive");
  }
}

StableGraph single_vertex_graph(int genus, int k) {
  if (k < 1 || k > genus || k > 3 * genus - 3) {
    throw std::invalid_argument("single_vertex_graph: need 1 <= k <= g and k <= 3g-3");
  }
  std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(k), {0, 0});
  StableGraph g({genus - k}, std::move(edges));
  g.validate();
  return g;
}

std::string graph_json(const StableGraph& g) {
  nlohmann::ordered_json j;
  j["vertex_genera"] = g.genera();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["aut"] = automorphism_count(g);
  j["canonical"] = canonical_form(g);
  return j.dump();
}

}  // namespace mcl
