#include "mcl/asymptotics/s_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"

namespace mcl {
namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("S sum: n must be positive");
}

// (2j+p)!/(2j-1)!
BigInt d_factor(int j, int p) {
  BigInt f = 1;
  for (int i = 2 * j; i <= 2 * j + p; ++i) f *= i;
  return f;
}

double d_factor_numeric(int j, int p) {
  double f = 1;
  for (int i = 2 * j; i <= 2 * j + p; ++i) f *= i;
  return f;
}

template <class T>
std::vector<T> convolve_upto(const std::vector<T>& a, const std::vector<T>& b, int n) {
  std::vector<T> out(static_cast<std::size_t>(n) + 1, T(0));
  if constexpr (std::is_same_v<T, double>) {
    kernels::active().convolve(a.data(), a.size(), b.data(), b.size(), out.data(), out.size());
  } else {
    for (int i = 0; i <= n; ++i) {
      if (a[i] == T(0)) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j] == T(0)) continue;
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

}  // namespace

double WeightSequence::at(int j) const {
  if (j < 1) throw std::invalid_argument("WeightSequence: index must be positive");
  return numeric(j);
}

Rational WeightSequence::exact_at(int j) const {
  if (!is_exact()) throw std::logic_error("WeightSequence " + name + " has no exact values");
  if (j < 1) throw std::invalid_argument("WeightSequence: index must be positive");
  return exact(j);
}

WeightSequence WeightSequence::constant(const Rational& c) {
  if (c.sign() < 0) throw std::invalid_argument("WeightSequence: weights must be non-negative");
  WeightSequence w;
  w.name = "constant " + c.str();
  const double v = c.to_double();
  w.numeric = [v](int) { return v; };
  w.exact = [c](int) { return c; };
  if (c == Rational(1)) w.beta = 0.0;
  return w;
}

WeightSequence WeightSequence::zeta(const MultBound& m) {
  WeightSequence w;
  w.name = "zeta_" + m.str();
  w.numeric = [m](int j) { return zeta_partial(m, 2 * j); };
  if (!m.infinite()) {
    const int mv = static_cast<int>(m.value());
    w.exact = [mv](int j) { return zeta_partial_exact(mv, 2 * j); };
  }
  w.beta = beta_value(m).value;
  return w;
}

BetaValue beta_value(const MultBound& m) {
  BetaValue b;
  if (m.infinite()) {
    b.argument = Rational(2);
  } else {
    const long mv = static_cast<long>(m.value());
    if (mv < 1) throw std::invalid_argument("beta_value: m must be at least 1");
    b.argument = Rational(BigInt(2 * mv), BigInt(mv + 1));
  }
  b.value = std::log(b.argument.to_double());
  return b;
}

bool admissible_on_circle(const WeightSequence& theta, double radius, int terms) {
  double prev_tail = 0, biggest = 0;
  for (int j = 1; j <= terms; ++j) {
    const double t = std::abs(theta.at(j) - 1.0) * std::pow(radius, j) / j;
    if (!std::isfinite(t)) return false;
    biggest = std::max(biggest, t);
    if (j > terms - 10) prev_tail = std::max(prev_tail, t);
  }
  return prev_tail <= 1e-12 * std::max(biggest, 1.0);
}

PowerSeries<Rational> g_theta_series(const WeightSequence& theta, int order) {
  if (order < 1) throw std::invalid_argument("g_theta_series: order must be at least 1");
  PowerSeries<Rational> s(order);
  for (int j = 1; j <= order; ++j) s[j] = theta.exact_at(j) / Rational(j);
  return s;
}

PowerSeries<double> g_theta_series_numeric(const WeightSequence& theta, int order) {
  if (order < 1) throw std::invalid_argument("g_theta_series: order must be at least 1");
  PowerSeries<double> s(order);
  for (int j = 1; j <= order; ++j) s[j] = theta.at(j) / j;
  return s;
}

template <class T>
PowerSeries<T> apply_Dp(const PowerSeries<T>& s, int p) {
  if (p < 0) throw std::invalid_argument("apply_Dp: p must be non-negative");
  PowerSeries<T> out(s.order());
  for (int k = 1; k <= s.order(); ++k) {
    if (s[k] == T(0)) continue;
    T f(1);
    for (int i = k; i <= k + p; ++i) f *= T(i);
    out[k] = s[k] * f;
  }
  return out;
}

template PowerSeries<Rational> apply_Dp(const PowerSeries<Rational>&, int);
template PowerSeries<double> apply_Dp(const PowerSeries<double>&, int);

Rational s_direct_exact(const WeightSequence& theta, const MomentIndex& p, int n, std::optional<int> k_max) {
  check_n(n);
  const int r = p.r();
  const int cap = std::min(n, k_max.value_or(n));
  if (r > cap) return Rational(0);
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) b[j] = theta.exact_at(j) / Rational(2 * j);
  // first r parts carry the p-factors
  std::vector<Rational> layer(static_cast<std::size_t>(n) + 1);
  layer[0] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) a[j] = b[j] * Rational(d_factor(j, p.p[i]));
    layer = convolve_upto(layer, a, n);
  }
  Rational sum = layer[n];
  BigInt fact = 1;
  for (int q = 1; r + q <= cap; ++q) {
    layer = convolve_upto(layer, b, n);
    fact *= q;
    sum += layer[n] / Rational(fact);
  }
  return sum;
}

double s_direct(const WeightSequence& theta, const MomentIndex& p, int n, std::optional<int> k_max) {
  check_n(n);
  const int r = p.r();
  const int cap = std::min(n, k_max.value_or(n));
  if (r > cap) return 0.0;
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  double b_mass = 0;
  for (int j = 1; j <= n; ++j) {
    b[j] = theta.at(j) / (2.0 * j);
    b_mass += b[j];
  }
  std::vector<double> layer(static_cast<std::size_t>(n) + 1, 0.0);
  layer[0] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 1; j <= n; ++j) a[j] = b[j] * d_factor_numeric(j, p.p[i]);
    layer = convolve_upto(layer, a, n);
  }
  // layer holds L_q / q!; L_{q+1}(t) <= max L_q * b_mass, so once
  // b_mass / (q+1) <= 1/2 the rest is at most twice the next term
  double sum = layer[n];
  for (int q = 1; r + q <= cap; ++q) {
    layer = convolve_upto(layer, b, n);
    kernels::active().scale(1.0 / q, layer.data(), layer.size());
    sum += layer[n];
    if (b_mass / (q + 1) <= 0.5) {
      const double bound = 2 * b_mass / (q + 1) * kernels::active().max_abs(layer.data(), layer.size());
      if (bound <= 1e-20 * sum) break;
    }
  }
  return sum;
}

Rational s_via_series(const WeightSequence& theta, const MomentIndex& p, int n) {
  check_n(n);
  const int order = 2 * n;
  PowerSeries<Rational> half = g_theta_series(theta, n).substitute_square(order);
  half *= Rational(1, 2);
  PowerSeries<Rational> g = series_exp(half);
  for (int v : p.p) g = g * apply_Dp(half, v);
  return g.coefficient(order);
}

double s_via_series_numeric(const WeightSequence& theta, const MomentIndex& p, int n) {
  check_n(n);
  const int order = 2 * n;
  PowerSeries<double> half = g_theta_series_numeric(theta, n).substitute_square(order);
  half *= 0.5;
  PowerSeries<double> g = series_exp(half);
  for (int v : p.p) g = g * apply_Dp(half, v);
  return g.coefficient(order);
}

double s_asymptote(double beta, const MomentIndex& p, int n) {
  check_n(n);
  const int r = p.r();
  const double e = p.total() + r;
  double lg = 0.5 * (beta - std::log(2.0)) - (r - 1) * std::log(2.0) + (e - 0.5) * std::log(2.0 * n) -
              std::lgamma(e + 0.5);
  for (int v : p.p) lg += std::lgamma(v + 1.0);
  return std::exp(lg);
}

int s_truncation_k_max(int n, double kappa) {
  check_n(n);
  if (!(kappa > 1)) throw std::invalid_argument("kappa must exceed 1");
  return static_cast<int>(std::floor(kappa * std::log(2.0 * n) / 2));
}

Rational s_truncated_exact(const WeightSequence& theta, const MomentIndex& p, int n, double kappa) {
  return s_direct_exact(theta, p, n, s_truncation_k_max(n, kappa));
}

double s_truncated(const WeightSequence& theta, const MomentIndex& p, int n, double kappa) {
  return s_direct(theta, p, n, s_truncation_k_max(n, kappa));
}

double poisson_tail_bound(double lambda, double x) {
  if (!(lambda > 0) || !(x > 0)) throw std::invalid_argument("poisson_tail_bound: need lambda, x > 0");
  return std::exp(-lambda * (x * std::log(x) - x));
}

double poisson_tail(double lambda, double x) {
  if (!(lambda > 0) || !(x > 0)) throw std::invalid_argument("poisson_tail: need lambda, x > 0");
  const int start = static_cast<int>(std::ceil(x * lambda));
  double sum = 0;
  for (int k = start; k < start + 2000; ++k) {
    const double t = std::exp(k * std::log(lambda) - std::lgamma(k + 1.0));
    sum += t;
    if (k > lambda && t < 1e-18 * sum) break;
  }
  return sum;
}

double mp_asymptotic_multicurve(int genus, const MultBound& m, const MomentIndex& p, double kappa) {
  if (genus < 2) throw std::invalid_argument("mp_asymptotic_multicurve: genus must be at least 2");
  const int n = 3 * genus - 3;
  const double e = p.total() + p.r() - 0.5;
  double front = std::sqrt(std::numbers::pi) / (2.0 * std::pow(6.0 * genus - 6.0, e));
  if (!m.infinite()) front *= std::sqrt((m.value() + 1.0) / m.value());
  return front * s_truncated(WeightSequence::zeta(m), p, n, kappa);
}

}  // namespace mcl
