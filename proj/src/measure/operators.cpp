#include "mcl/measure/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"
#include "mcl/intersection/volume.hpp"

namespace mcl {
namespace {

void check_monomials(const StableGraph& g, const SparsePolynomial& p) {
  const int target = 6 * g.genus() - 6;
  for (const auto& [exps, c] : p.terms()) {
    int total = 0;
    for (int n : exps) {
      if (n % 2 == 0) throw std::logic_error("graph_polynomial: even exponent in " + p.str());
      total += n + 1;
    }
    if (total != target) throw std::logic_error("graph_polynomial: degree identity fails for " + p.str());
  }
}

}  // namespace

GraphPolynomial graph_polynomial(const StableGraph& g) {
  g.validate();
  const int e = g.edge_count();
  auto vars = SparsePolynomial::numbered_variables(e);
  SparsePolynomial f = SparsePolynomial::monomial(vars, Exponents(static_cast<std::size_t>(e), 1), 1);
  const auto at = g.half_edges_at();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> target;
    for (int h : at[v]) target.push_back(h / 2);
    const auto& vol = volume_polynomial(g.genera()[v], static_cast<int>(target.size()));
    f = f * vol.relabel(target, vars);
  }
  check_monomials(g, f);
  return {g, std::move(f)};
}

Rational apply_Y(const SparsePolynomial& p, std::span<const int> m) {
  if (m.size() != p.variable_count()) {
    throw std::invalid_argument("apply_Y: " + std::to_string(m.size()) + " multiplicities for " +
                                std::to_string(p.variable_count()) + " variables");
  }
  for (int x : m) {
    if (x < 1) throw std::invalid_argument("apply_Y: multiplicities must be positive");
  }
  Rational out;
  for (const auto& [exps, c] : p.terms()) {
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      num *= factorial(exps[i]);
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m[i]), static_cast<unsigned long>(exps[i] + 1));
      den *= pw;
    }
    out += c * Rational(num, den);
  }
  return out;
}

ZProfile z_profile(const SparsePolynomial& p) {
  std::map<Exponents, Rational> merged;
  for (const auto& [exps, c] : p.terms()) {
    Exponents key = exps;
    std::sort(key.begin(), key.end());
    BigInt f = 1;
    for (int n : key) f *= factorial(n);
    merged[key] += c * Rational(f);
  }
  return {merged.begin(), merged.end()};
}

PiScaled apply_Z(const ZProfile& profile, const MultBound& m) {
  PiScaled out;
  for (const auto& [exps, w] : profile) {
    PiScaled t(w);
    for (int n : exps) {
      if (n == 0 && m.infinite()) throw std::domain_error("apply_Z: exponent 0 diverges at m = inf");
      t *= zeta_partial_scaled(m, n + 1);
    }
    out += t;
  }
  return out;
}

PiScaled apply_Z(const SparsePolynomial& p, const MultBound& m) { return apply_Z(z_profile(p), m); }

double apply_Z_numeric(const SparsePolynomial& p, const MultBound& m) {
  double out = 0;
  for (const auto& [exps, c] : p.terms()) {
    double t = c.to_double();
    for (int n : exps) {
      if (n == 0 && m.infinite()) throw std::domain_error("apply_Z: exponent 0 diverges at m = inf");
      t *= factorial(n).get_d() * zeta_partial(m, n + 1);
    }
    out += t;
  }
  return out;
}

Rational frequency_c(const WeightedStableGraph& wg) {
  wg.validate();
  const auto f = graph_polynomial(wg.graph);
  const Rational y = apply_Y(f.polynomial, wg.multiplicities);
  return y / Rational(BigInt(weighted_automorphism_count(wg)) * factorial(6 * wg.graph.genus() - 6));
}

}  // namespace mcl
