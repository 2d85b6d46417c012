#include "mcl/moments/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"
#include "mcl/intersection/correlators.hpp"
#include "mcl/measure/multicurve_measure.hpp"

namespace mcl {
namespace {

// Gamma(a/2 + 1) for a >= -1 (a odd gives a half-integer argument).
PiScaled gamma_twice_plus_one(int a) {
  if (a < -1) throw std::invalid_argument("simplex_monomial_integral: exponent below -1/2");
  if (a % 2 == 0) return PiScaled(Rational(factorial(a / 2)));
  return gamma_half((a + 1) / 2);
}

void for_each_composition(int total, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> j(static_cast<std::size_t>(k), 1);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      j[pos] = left;
      fn(j);
      return;
    }
    for (int v = 1; v <= left - (k - 1 - pos); ++v) {
      j[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (k >= 1 && total >= k) rec(rec, 0, total);
}

BigInt falling(int top, int count) {  // top (top-1) ... (top-count+1)
  BigInt out = 1;
  for (int i = 0; i < count; ++i) out *= top - i;
  return out;
}

Rational aut_gamma_gk(int k) { return Rational(BigInt(1) << static_cast<unsigned>(k)) * Rational(factorial(k)); }

}  // namespace

MomentIndex::MomentIndex(std::vector<int> values) : p(std::move(values)) {
  if (p.empty()) throw std::invalid_argument("MomentIndex: need at least one entry");
  for (int v : p) {
    if (v < 0) throw std::invalid_argument("MomentIndex: entries must be non-negative");
  }
}

MomentIndex MomentIndex::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("MomentIndex: bad entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("MomentIndex: bad entry '" + item + "'");
    out.push_back(v);
  }
  return MomentIndex(std::move(out));
}

int MomentIndex::total() const { return std::accumulate(p.begin(), p.end(), 0); }

std::string MomentIndex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

MomentEstimate MomentAccumulator::estimate() const {
  MomentEstimate e;
  e.sample_count = count;
  if (count == 0) return e;
  const double n = static_cast<double>(count);
  e.value = sum / n;
  if (count > 1) {
    const double var = std::max(0.0, (sumsq - n * e.value * e.value) / (n - 1));
    e.standard_error = std::sqrt(var / n);
  }
  return e;
}

// open: int_{sum x <= 1} prod x^d = prod Gamma(d+1) / Gamma(sum d + k + 1)
// slice: density on sum x = 1 over the first k-1 coordinates, Gamma(sum d + k)
PiScaled simplex_monomial_integral_half(const std::vector<int>& twice_d, SimplexVariant v) {
  if (twice_d.empty()) throw std::invalid_argument("simplex_monomial_integral: empty exponent vector");
  PiScaled num(Rational(1));
  int twice_total = 0;
  for (int a : twice_d) {
    num *= gamma_twice_plus_one(a);
    twice_total += a;
  }
  const int k = static_cast<int>(twice_d.size());
  const int shift = v == SimplexVariant::open ? k : k - 1;
  return num / gamma_twice_plus_one(twice_total + 2 * shift);
}

Rational simplex_monomial_integral(const std::vector<int>& d, SimplexVariant v) {
  std::vector<int> twice(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw std::invalid_argument("simplex_monomial_integral: negative exponent");
    twice[i] = 2 * d[i];
  }
  return simplex_monomial_integral_half(twice, v).rational();
}

double simplex_monomial_integral(const std::vector<double>& d, double r, SimplexVariant v) {
  if (d.empty() || !(r > 0)) throw std::invalid_argument("simplex_monomial_integral: bad arguments");
  double lg = 0, total = 0;
  for (double x : d) {
    if (!(x > -1)) throw std::invalid_argument("simplex_monomial_integral: exponent must exceed -1");
    lg += std::lgamma(x + 1);
    total += x;
  }
  const double k = static_cast<double>(d.size());
  const double shift = v == SimplexVariant::open ? k : k - 1;
  return std::exp(lg - std::lgamma(total + shift + 1) + (total + shift) * std::log(r));
}

double moment_function(std::span<const double> x, const MomentIndex& p) {
  double out = 1, partial = 0;
  for (int i = 0; i < p.r(); ++i) {
    const double xi = i < static_cast<int>(x.size()) ? x[i] : 0.0;
    if (i > 0) out *= 1.0 - partial;
    if (p.p[i] > 0) out *= std::pow(xi, p.p[i]);
    partial += xi;
  }
  return out;
}

MomentEstimate mp_empirical(std::span<const LengthVector> samples, const MomentIndex& p) {
  MomentAccumulator acc;
  for (const auto& s : samples) {
    if (s.ordering != Ordering::size_biased) {
      throw std::invalid_argument("mp_empirical: samples must be in size-biased order");
    }
    acc.add(moment_function(s.values, p));
  }
  return acc.estimate();
}

double mp_gem_closed(double theta, const MomentIndex& p) {
  if (!(theta > 0)) throw std::invalid_argument("mp_gem_closed: theta must be positive");
  double lg = p.r() * std::log(theta) + std::lgamma(theta) - std::lgamma(p.total() + theta + p.r());
  for (int v : p.p) lg += std::lgamma(v + 1.0);
  return std::exp(lg);
}

Rational mp_gem_closed_half(const MomentIndex& p) {
  PiScaled out(Rational(1) / Rational(BigInt(1) << static_cast<unsigned>(p.r())));
  out *= gamma_half(0);
  for (int v : p.p) out *= PiScaled(Rational(factorial(v)));
  return (out / gamma_half(p.total() + p.r())).rational();
}

Rational dirichlet_size_biased_moment(const std::vector<int>& n, const MomentIndex& p) {
  const int k = static_cast<int>(n.size());
  const int r = p.r();
  if (r > k) return Rational(0);
  const int sum_n = std::accumulate(n.begin(), n.end(), 0);
  // table[i][e] = (n_e + p_i + 1)! / n_e!
  std::vector<std::vector<BigInt>> table(r, std::vector<BigInt>(k));
  for (int i = 0; i < r; ++i) {
    for (int e = 0; e < k; ++e) table[i][e] = falling(n[e] + p.p[i] + 1, p.p[i] + 1);
  }
  BigInt total = 0;
  std::vector<char> used(k, 0);
  auto rec = [&](auto&& self, int i, const BigInt& acc) -> void {
    if (i == r) {
      total += acc;
      return;
    }
    for (int e = 0; e < k; ++e) {
      if (used[e]) continue;
      used[e] = 1;
      self(self, i + 1, acc * table[i][e]);
      used[e] = 0;
    }
  };
  rec(rec, 0, BigInt(1));
  const int lo = sum_n + k - 1;
  return Rational(total, falling(lo + p.total() + r, p.total() + r));
}

Rational mp_exact_multicurve(int genus, const MultBound& m, const MomentIndex& p, std::optional<double> kappa) {
  PiScaled num, den;
  if (kappa) {
    const int kmax = truncation_k_max(genus, *kappa);
    for (int k = 1; k <= kmax; ++k) {
      const PiScaled scale(single_vertex_prefactor(genus, k) / aut_gamma_gk(k));
      for_each_composition(3 * genus - 3, k, [&](const std::vector<int>& j) {
        PiScaled w(c_coefficient(genus, k, j));
        std::vector<int> n(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
          w *= zeta_partial_scaled(m, 2 * j[i]) / PiScaled(Rational(2 * j[i]));
          n[i] = 2 * j[i] - 1;
        }
        w *= scale;
        den += w;
        num += w * PiScaled(dirichlet_size_biased_moment(n, p));
      });
    }
  } else {
    for (const auto& rec : graph_records(genus)) {
      const PiScaled inv_aut(Rational(1) / Rational(static_cast<long long>(rec.aut)));
      for (const auto& [exps, coeff] : rec.profile) {
        PiScaled w(coeff);
        std::vector<int> n(exps.begin(), exps.end());
        for (int e : n) w *= zeta_partial_scaled(m, e + 1);
        w *= inv_aut;
        den += w;
        num += w * PiScaled(dirichlet_size_biased_moment(n, p));
      }
    }
  }
  return (num / den).rational();
}

Rational w_gk(int genus, int k) { return single_vertex_prefactor(genus, k) * Rational(factorial(6 * genus - 7)); }

Rational mp_gamma_gk_formula(int genus, const MultBound& m, int k, const MomentIndex& p) {
  const int r = p.r();
  if (k < r || k > genus) throw std::invalid_argument("mp_gamma_gk_formula: need r <= k <= g");
  PiScaled sum;
  for_each_composition(3 * genus - 3, k, [&](const std::vector<int>& j) {
    PiScaled t(c_coefficient(genus, k, j));
    for (int x : j) t *= zeta_partial_scaled(m, 2 * x) / PiScaled(Rational(2 * x));
    BigInt f = 1;
    for (int i = 0; i < r; ++i) f *= falling(2 * j[i] + p.p[i], p.p[i] + 1);
    sum += t * PiScaled(Rational(f));
  });
  const Rational front = w_gk(genus, k) * Rational(factorial(k)) /
                         Rational(factorial(k - r) * factorial(6 * genus - 7 + p.total() + r));
  return (PiScaled(front) * sum / single_vertex_z(genus, k, m)).rational();
}

}  // namespace mcl
