#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcl/core/pi_scaled.hpp"
#include "mcl/measure/zeta.hpp"
#include "mcl/sampling/samplers.hpp"

namespace mcl {

/// p = (p_1, ..., p_r), r >= 1.
struct MomentIndex {
  std::vector<int> p;

  explicit MomentIndex(std::vector<int> values);
  /// "1,1" or "(1,1)".
  static MomentIndex parse(std::string_view text);
  int r() const { return static_cast<int>(p.size()); }
  int total() const;
  std::string str() const;  // "(1,1)"
};

struct MomentEstimate {
  double value = 0;
  double standard_error = 0;
  std::uint64_t sample_count = 0;
};

/// Running sums for an empirical mean; merge() in a fixed order for
/// reproducible parallel reductions.
struct MomentAccumulator {
  double sum = 0, sumsq = 0;
  std::uint64_t count = 0;

  void add(double v) {
    sum += v;
    sumsq += v * v;
    ++count;
  }
  void merge(const MomentAccumulator& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }
  MomentEstimate estimate() const;
};

enum class SimplexVariant { open, slice };  // Delta_{<= r} or Delta_{= r}

/// Integral of prod x_i^{d_i} over the simplex of size 1.
Rational simplex_monomial_integral(const std::vector<int>& d, SimplexVariant v);
/// Same with d_i = twice_d[i] / 2 allowed to be half-integers.
PiScaled simplex_monomial_integral_half(const std::vector<int>& twice_d, SimplexVariant v);
/// Real exponents and simplex size r, through lgamma.
double simplex_monomial_integral(const std::vector<double>& d, double r, SimplexVariant v);

/// (1 - x_1) ... (1 - x_1 - ... - x_{r-1}) x_1^{p_1} ... x_r^{p_r}, with
/// missing coordinates read as 0 and 0^0 = 1.
double moment_function(std::span<const double> x, const MomentIndex& p);

/// Mean of moment_function over size-biased samples.
MomentEstimate mp_empirical(std::span<const LengthVector> samples, const MomentIndex& p);

/// theta^r (theta-1)! p_1! ... p_r! / Gamma(p_1 + ... + p_r + theta + r).
double mp_gem_closed(double theta, const MomentIndex& p);
/// The theta = 1/2 value, which is rational.
Rational mp_gem_closed_half(const MomentIndex& p);

/// M_p of the size-biased length vector of the Dirichlet(n_e + 1) law,
/// i.e. sum over injective slots of prod (n+p+1)!/n! times (N+k-1)!/(N+P+r+k-1)!.
Rational dirichlet_size_biased_moment(const std::vector<int>& n, const MomentIndex& p);

/// Exact M_p of the size-biased random multicurve length vector: over every
/// stable graph, or over Gamma_{g,k}, k <= kappa log(6g-6)/2, when kappa is
/// given. Rational for every m.
Rational mp_exact_multicurve(int genus, const MultBound& m, const MomentIndex& p,
                             std::optional<double> kappa = std::nullopt);

/// w_{g,k} = (6g-5-2k)! (6g-7)! / ((g-k)! (3g-3-k)!) 2^{3k-3} / 3^{g-k}.
Rational w_gk(int genus, int k);

/// M_p(U^{(g,m,k)*}) from the closed formula in c~ and zeta_m; r <= k <= g.
Rational mp_gamma_gk_formula(int genus, const MultBound& m, int k, const MomentIndex& p);

/// E(V_j^n) for V ~ PD(theta), by adaptive quadrature (absolute tolerance 1e-9).
double pd_marginal_moment(double theta, int j, int n);
/// E_1(x) = int_x^inf e^-y / y dy: series up to x = 1, continued fraction beyond.
double exp_integral_e1(double x);

}  // namespace mcl
