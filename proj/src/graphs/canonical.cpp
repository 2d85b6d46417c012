#include <algorithm>
#include <map>
#include <stdexcept>

#include "mcl/graphs/stable_graph.hpp"

namespace mcl {
namespace {

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sig) {
  std::vector<std::vector<int>> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v) {
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  }
  return out;
}

int distinct(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

class Search {
 public:
  explicit Search(const StableGraph& g) : n_(g.vertex_count()), gen_(g.genera()), a_(g.adjacency()) {
    std::vector<std::vector<int>> sig(n_);
    for (int v = 0; v < n_; ++v) sig[v] = {gen_[v], g.degree(v), a_[v][v]};
    run(rank_signatures(sig));
  }

  const std::vector<int>& best_order() const { return leaves_.front(); }
  const std::vector<std::vector<int>>& leaves() const { return leaves_; }

 private:
  std::vector<int> refine(std::vector<int> colors) const {
    int k = distinct(colors);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n_; ++u) {
          if (u != v && a_[v][u] > 0) nb.emplace_back(colors[u], a_[v][u]);
        }
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(colors[v]);
        for (const auto& [c, m] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(m);
        }
      }
      colors = rank_signatures(sig);
      const int k2 = distinct(colors);
      if (k2 == k) return colors;
      k = k2;
    }
  }

  void run(std::vector<int> colors) {
    colors = refine(std::move(colors));
    if (distinct(colors) == n_) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[colors[v]] = v;
      std::vector<int> cert;
      cert.reserve(n_ + n_ * (n_ + 1) / 2);
      for (int p = 0; p < n_; ++p) cert.push_back(gen_[order[p]]);
      for (int p = 0; p < n_; ++p) {
        for (int q = p; q < n_; ++q) cert.push_back(a_[order[p]][order[q]]);
      }
      if (leaves_.empty() || cert < best_) {
        best_ = std::move(cert);
        leaves_.assign(1, order);
      } else if (cert == best_) {
        leaves_.push_back(order);
      }
      return;
    }
    // first non-singleton cell
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> ind(n_);
      for (int u = 0; u < n_; ++u) ind[u] = 2 * colors[u];
      ind[v] = 2 * target - 1;
      run(std::move(ind));
    }
  }

  int n_;
  std::vector<int> gen_;
  std::vector<std::vector<int>> a_;
  std::vector<int> best_;
  std::vector<std::vector<int>> leaves_;
};

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

CanonicalData canonicalize(const StableGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("canonicalize: empty graph");
  const Search s(g);
  const auto& order = s.best_order();
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;

  std::vector<int> genera(n);
  for (int p = 0; p < n; ++p) genera[p] = g.genera()[order[p]];
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int a = pos[u], b = pos[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());

  CanonicalData out;
  for (int p = 0; p < n; ++p) {
    if (p > 0) out.canonical += ",";
    out.canonical += std::to_string(genera[p]);
  }
  out.canonical += ";";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e > 0) out.canonical += ",";
    out.canonical += std::to_string(edges[e].first) + "-" + std::to_string(edges[e].second);
  }
  out.representative = StableGraph(std::move(genera), std::move(edges));

  for (const auto& leaf : s.leaves()) {
    std::vector<int> perm(n);
    for (int p = 0; p < n; ++p) perm[order[p]] = leaf[p];
    out.vertex_autos.push_back(std::move(perm));
  }
  return out;
}

std::string canonical_form(const StableGraph& g) { return canonicalize(g).canonical; }

std::int64_t automorphism_count(const StableGraph& g) {
  const auto data = canonicalize(g);
  const auto a = g.adjacency();
  std::int64_t out = static_cast<std::int64_t>(data.vertex_autos.size());
  for (int u = 0; u < g.vertex_count(); ++u) {
    out *= factorial64(a[u][u]) << a[u][u];
    for (int v = u + 1; v < g.vertex_count(); ++v) out *= factorial64(a[u][v]);
  }
  return out;
}

std::int64_t weighted_automorphism_count(const WeightedStableGraph& wg) {
  wg.validate();
  const StableGraph& g = wg.graph;
  const auto data = canonicalize(g);
  std::map<std::pair<int, int>, std::vector<int>> weights;
  for (int e = 0; e < g.edge_count(); ++e) weights[g.edges()[e]].push_back(wg.multiplicities[e]);
  std::int64_t per_auto = 1;
  for (auto& [pair, w] : weights) {
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      per_auto *= factorial64(static_cast<int>(j - i));
      i = j;
    }
    if (pair.first == pair.second) per_auto <<= w.size();
  }
  std::int64_t total = 0;
  for (const auto& perm : data.vertex_autos) {
    bool ok = true;
    for (const auto& [pair, w] : weights) {
      const int a = perm[pair.first], b = perm[pair.second];
      const auto it = weights.find({std::min(a, b), std::max(a, b)});
      if (it == weights.end() || it->second != w) {
        ok = false;
        break;
      }
    }
    if (ok) total += per_auto;
  }
  return total;
}

}  // namespace mcl
