#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcl {

/// Connected stable graph without legs.
///
/// Edge e joins edges()[e].first <= edges()[e].second; its half-edges are
/// 2e (at the first endpoint) and 2e+1 (at the second). A loop has both
/// half-edges at the same vertex.
class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges);

  const std::vector<int>& genera() const { return genera_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(genera_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// |E| - |V| + 1 + sum g_v.
  int genus() const;
  int degree(int v) const;
  int loops(int v) const;
  int half_edge_vertex(int h) const;
  /// Half-edges at each vertex, in increasing order.
  std::vector<std::vector<int>> half_edges_at() const;
  /// Edge multiplicity matrix; the diagonal counts loops.
  std::vector<std::vector<int>> adjacency() const;

  bool connected() const;
  bool stable() const;
  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;

 private:
  std::vector<int> genera_;
  std::vector<std::pair<int, int>> edges_;
};

struct WeightedStableGraph {
  StableGraph graph;
  std::vector<int> multiplicities;  // one per edge, >= 1

  bool primitive() const;
  void validate() const;
};

struct CanonicalData {
  std::string canonical;                        // e.g. "0,0;0-1,0-1,0-1"
  StableGraph representative;                   // relabeled to canonical order
  std::vector<std::vector<int>> vertex_autos;   // permutations of the input's vertices
};

/// Canonical labeling by color refinement plus individualization. The
/// vertex automorphisms are the leaf maps that reproduce the minimal
/// certificate.
CanonicalData canonicalize(const StableGraph& g);
std::string canonical_form(const StableGraph& g);

/// |Aut| acting on half-edges: |Aut_V| * prod_{u<v} A_uv! * prod_v A_vv! 2^{A_vv}.
std::int64_t automorphism_count(const StableGraph& g);
std::int64_t weighted_automorphism_count(const WeightedStableGraph& g);

/// One representative per isomorphism class with 1 <= |E| <= min(max_edges, 3g-3),
/// in canonical representative form, sorted by edge count then canonical string.
std::vector<StableGraph> enumerate_stable_graphs(int genus, std::optional<int> max_edges = std::nullopt);

/// Gamma_{g,k}: one vertex of genus g-k carrying k loops.
StableGraph single_vertex_graph(int genus, int k);

/// {"vertex_genera": [...], "edges": [[u,v],...], "aut": n, "canonical": "..."}
std::string graph_json(const StableGraph& g);

}  // namespace mcl
