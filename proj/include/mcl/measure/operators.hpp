#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mcl/core/polynomial.hpp"
#include "mcl/graphs/stable_graph.hpp"
#include "mcl/measure/zeta.hpp"

namespace mcl {

/// F_Gamma = prod_e x_e * prod_v V_{g_v,n_v}(x at v), over variables
/// x1..xE in edge order. A loop feeds its variable to V twice.
struct GraphPolynomial {
  StableGraph graph;
  SparsePolynomial polynomial;
};

/// Throws std::logic_error if some monomial has an even exponent or
/// sum (n_e + 1) != 6g - 6.
GraphPolynomial graph_polynomial(const StableGraph& g);

/// Y_m(prod x^n) = prod n! / prod m^{n+1}, extended linearly.
Rational apply_Y(const SparsePolynomial& p, std::span<const int> m);

/// Z_m = sum of Y over the box m_e <= m, i.e. coeff * prod n_e! zeta_m(n_e + 1)
/// per monomial. Every term must carry the same power of pi at m = inf.
PiScaled apply_Z(const SparsePolynomial& p, const MultBound& m);
double apply_Z_numeric(const SparsePolynomial& p, const MultBound& m);

/// Monomials merged by their sorted exponent multiset, each weighted by
/// coeff * prod n_e!. Enough to evaluate Z_m for any m.
using ZProfile = std::vector<std::pair<Exponents, Rational>>;
ZProfile z_profile(const SparsePolynomial& p);
PiScaled apply_Z(const ZProfile& profile, const MultBound& m);

/// c(Gamma, m) = Y_m(F_Gamma) / (|Aut(Gamma, m)| (6g-6)!).
Rational frequency_c(const WeightedStableGraph& wg);

}  // namespace mcl
