#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "mcl/graphs/stable_graph.hpp"

namespace mcl {
namespace {

// Every graph with E+1 edges contracts (along any edge) to a stable graph
// with E edges, so splitting vertices of level E reaches all of level E+1.
void children(const StableGraph& g, std::vector<StableGraph>& out) {
  const auto& genera = g.genera();
  const auto& edges = g.edges();
  const auto at = g.half_edges_at();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (genera[v] >= 1) {
      auto gen = genera;
      --gen[v];
      auto e = edges;
      e.emplace_back(v, v);
      out.emplace_back(std::move(gen), std::move(e));
    }
    const auto& hs = at[v];
    const int deg = static_cast<int>(hs.size());
    const int nv = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << deg); ++mask) {
      const int moved = __builtin_popcount(mask);
      for (int g1 = 0; g1 <= genera[v]; ++g1) {
        const int g2 = genera[v] - g1;
        if (2 * g1 - 2 + moved + 1 <= 0 || 2 * g2 - 2 + (deg - moved) + 1 <= 0) continue;
        // (mask, g1) and (~mask, g2) give the same graph
        const std::uint32_t comp = ~mask & ((1u << deg) - 1);
        if (std::make_pair(comp, g2) < std::make_pair(mask, g1)) continue;
        auto gen = genera;
        gen[v] = g2;
        gen.push_back(g1);
        auto e = edges;
        for (int i = 0; i < deg; ++i) {
          if (!(mask & (1u << i))) continue;
          const int h = hs[i];
          auto& edge = e[h / 2];
          (h % 2 == 0 ? edge.first : edge.second) = nv;
        }
        e.emplace_back(v, nv);
        out.emplace_back(std::move(gen), std::move(e));
      }
    }
  }
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int genus, std::optional<int> max_edges) {
  if (genus < 2) throw std::invalid_argument("enumerate_stable_graphs: genus must be at least 2");
  int cap = 3 * genus - 3;
  if (max_edges) cap = std::min(cap, *max_edges);
  std::vector<StableGraph> level{StableGraph({genus}, {})};
  std::vector<StableGraph> result;
  for (int e = 1; e <= cap; ++e) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, StableGraph>> next;
    std::vector<StableGraph> kids;
    for (const auto& g : level) {
      kids.clear();
      children(g, kids);
      for (const auto& k : kids) {
        auto data = canonicalize(k);
        if (seen.insert(data.canonical).second) next.emplace_back(std::move(data.canonical), std::move(data.representative));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [c, g] : next) {
      level.push_back(g);
      result.push_back(std::move(g));
    }
  }
  return result;
}

}  // namespace mcl
