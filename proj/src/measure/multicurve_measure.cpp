#include "mcl/measure/multicurve_measure.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mcl/core/combinatorics.hpp"
#include "mcl/intersection/correlators.hpp"

namespace mcl {

std::vector<GraphRecord> build_graph_records(int genus, int threads) {
  const auto graphs = enumerate_stable_graphs(genus);
  std::vector<GraphRecord> out(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      auto& r = out[i];
      r.graph = graphs[i];
      r.canonical = canonical_form(graphs[i]);
      r.aut = automorphism_count(graphs[i]);
      r.profile = z_profile(graph_polynomial(graphs[i]).polynomial);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

std::string render(const PiScaled& v) {
  if (v.is_rational()) return v.coeff.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.to_double());
  return buf;
}

}  // namespace

const std::vector<GraphRecord>& graph_records(int genus, int threads) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<GraphRecord>>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[genus];
  if (!slot) slot = std::make_unique<std::vector<GraphRecord>>(build_graph_records(genus, threads));
  return *slot;
}

PiScaled MulticurveMeasure::b() const {
  return total_mass / PiScaled(Rational(factorial(6 * genus - 6)));
}

MulticurveMeasure build_measure(int genus, const MultBound& m, int threads) {
  MulticurveMeasure out;
  out.genus = genus;
  out.bound = m;
  for (const auto& r : graph_records(genus, threads)) {
    MeasureEntry e;
    e.graph = r.graph;
    e.canonical = r.canonical;
    e.aut = r.aut;
    e.z = apply_Z(r.profile, m);
    e.weight = e.z / PiScaled(Rational(BigInt(r.aut)));
    out.total_mass += e.weight;
    out.entries.push_back(std::move(e));
  }
  for (auto& e : out.entries) e.probability = (e.weight / out.total_mass).rational();
  return out;
}

PiScaled total_mass_b(int genus, const MultBound& m, int threads) { return build_measure(genus, m, threads).b(); }

int truncation_k_max(int genus, double kappa) {
  if (!(kappa > 1)) throw std::invalid_argument("kappa must exceed 1");
  const int k = static_cast<int>(std::floor(kappa * std::log(6.0 * genus - 6.0) / 2.0));
  return std::min(k, genus);
}

PiScaled single_vertex_z(int genus, int k, const MultBound& m) {
  const int total = 3 * genus - 3;
  std::vector<int> j(static_cast<std::size_t>(k), 1);
  PiScaled sum;
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      j[pos] = left;
      PiScaled t(c_coefficient(genus, k, j));
      for (int x : j) t *= zeta_partial_scaled(m, 2 * x) / PiScaled(Rational(2 * x));
      sum += t;
      return;
    }
    for (int v = 1; v <= left - (k - 1 - pos); ++v) {
      j[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return PiScaled(single_vertex_prefactor(genus, k)) * sum;
}

PiScaled truncated_mass_b(int genus, const MultBound& m, double kappa) {
  PiScaled out;
  const int kmax = truncation_k_max(genus, kappa);
  for (int k = 1; k <= kmax; ++k) {
    const Rational aut = Rational(BigInt(1) << static_cast<unsigned>(k)) * Rational(factorial(k));
    out += single_vertex_z(genus, k, m) / PiScaled(aut);
  }
  return out / PiScaled(Rational(factorial(6 * genus - 6)));
}

double log_mass_asymptote(int genus, const MultBound& m) {
  if (genus < 2) throw std::invalid_argument("mass_asymptote: genus must be at least 2");
  double r = -std::log(std::numbers::pi) - std::log(6.0 * genus - 6.0) - std::lgamma(4.0 * genus - 3.0) +
             (4.0 * genus - 4.0) * std::log(4.0 / 3.0);
  if (!m.infinite()) r += 0.5 * std::log(m.value() / (m.value() + 1.0));
  return r;
}

double mass_asymptote(int genus, const MultBound& m) { return std::exp(log_mass_asymptote(genus, m)); }

std::string weights_csv(const MulticurveMeasure& measure) {
  std::string out = "canonical_graph,aut,Zm,weight,probability\n";
  for (const auto& e : measure.entries) {
    out += "\"" + e.canonical + "\"," + std::to_string(e.aut) + "," + render(e.z) + "," + render(e.weight) + "," +
           e.probability.str() + "\n";
  }
  return out;
}

}  // namespace mcl
