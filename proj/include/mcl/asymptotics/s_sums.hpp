#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mcl/core/power_series.hpp"
#include "mcl/measure/zeta.hpp"
#include "mcl/moments/moments.hpp"

namespace mcl {

/// theta_j >= 0 indexed by part size j >= 1.
struct WeightSequence {
  std::string name;
  std::function<double(int)> numeric;
  std::function<Rational(int)> exact;  // empty unless every theta_j is rational
  std::optional<double> beta;          // value at z = 1 of g_theta(z) + log(1 - z), when known

  bool is_exact() const { return static_cast<bool>(exact); }
  double at(int j) const;
  Rational exact_at(int j) const;  // throws unless is_exact()

  static WeightSequence constant(const Rational& c);
  /// theta_j = zeta_m(2j); exact for finite m, beta = log(2m/(m+1)).
  static WeightSequence zeta(const MultBound& m);
};

struct BetaValue {
  Rational argument;  // beta = log(argument)
  double value = 0;
};

/// log(2m/(m+1)), log 2 at m = inf.
BetaValue beta_value(const MultBound& m);

/// True when the coefficients (theta_j - 1)/j of g_theta(z) + log(1-z)
/// decay on the circle |z| = radius over the first `terms` terms.
bool admissible_on_circle(const WeightSequence& theta, double radius = 1.5, int terms = 400);

/// g_theta(z) = sum_{j>=1} theta_j z^j / j up to z^order.
PowerSeries<Rational> g_theta_series(const WeightSequence& theta, int order);
PowerSeries<double> g_theta_series_numeric(const WeightSequence& theta, int order);

/// D_p(f) = z (d/dz)^{p+1} (z^p f); z^k -> (k+p)!/(k-1)! z^k.
template <class T>
PowerSeries<T> apply_Dp(const PowerSeries<T>& s, int p);

/// S_{theta,p,n} = sum_{k>=r} 1/(k-r)! sum_{j_1+...+j_k=n} prod theta_{j_i}/(2j_i)
///                 prod_{i<=r} (2j_i+p_i)!/(2j_i-1)!,
/// by dynamic programming over (remaining total, parts used). k_max caps k.
Rational s_direct_exact(const WeightSequence& theta, const MomentIndex& p, int n,
                        std::optional<int> k_max = std::nullopt);
/// Double precision; stops once the remaining layers are provably below
/// 1e-20 of the running sum.
double s_direct(const WeightSequence& theta, const MomentIndex& p, int n, std::optional<int> k_max = std::nullopt);

/// [z^{2n}] exp(g(z^2)/2) prod D_{p_i}(g(z^2)/2).
Rational s_via_series(const WeightSequence& theta, const MomentIndex& p, int n);
double s_via_series_numeric(const WeightSequence& theta, const MomentIndex& p, int n);

/// sqrt(e^beta/2) prod p_i! / 2^{r-1} (2n)^{P+r-1/2} / Gamma(P+r+1/2), P = sum p_i.
double s_asymptote(double beta, const MomentIndex& p, int n);

/// floor(kappa log(2n) / 2); kappa must exceed 1.
int s_truncation_k_max(int n, double kappa);
Rational s_truncated_exact(const WeightSequence& theta, const MomentIndex& p, int n, double kappa);
double s_truncated(const WeightSequence& theta, const MomentIndex& p, int n, double kappa);

/// exp(-lambda (x log x - x)), bounding sum_{k >= ceil(x lambda)} lambda^k / k!.
double poisson_tail_bound(double lambda, double x);
/// The tail itself, summed directly.
double poisson_tail(double lambda, double x);

/// sqrt((m+1)/m) sqrt(pi) / (2 (6g-6)^{P+r-1/2}) * S~ with theta = zeta_m(2j), n = 3g-3.
double mp_asymptotic_multicurve(int genus, const MultBound& m, const MomentIndex& p, double kappa);

}  // namespace mcl
