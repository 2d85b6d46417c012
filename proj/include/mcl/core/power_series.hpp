#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "mcl/core/rational.hpp"
#include "mcl/kernels/kernels.hpp"

namespace mcl {

/// Truncated univariate power series sum_{i<=N} c_i z^i.
///
/// T = Rational gives exact arithmetic; T = double or long double gives the
/// numeric mode. The truncation order N is always explicit, and binary
/// operations on series of different orders truncate to the smaller one.
template <class T>
class PowerSeries {
 public:
  static constexpr bool exact = std::is_same_v<T, Rational>;

  explicit PowerSeries(int order) : c_(checked(order) + 1, T(0)) {}
  PowerSeries(int order, std::vector<T> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(checked(order)) + 1, T(0));
  }

  /// z^k, or the zero series when k exceeds the order.
  static PowerSeries monomial(int order, int k, T coeff = T(1)) {
    PowerSeries s(order);
    if (k >= 0 && k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(coeff);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }

  const T& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  T& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  /// [z^n] of the series; throws past the truncation order.
  const T& coefficient(int n) const {
    if (n < 0 || n > order()) {
      throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond order " +
                              std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(n)];
  }

  PowerSeries truncated(int order) const {
    return PowerSeries(order, std::vector<T>(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(
                                                                    c_.size(), order + 1)));
  }

  /// f(z) -> f(z^2), kept to `new_order`.
  PowerSeries substitute_square(int new_order) const {
    PowerSeries out(new_order);
    for (int i = 0; 2 * i <= new_order && i <= order(); ++i) out.c_[2 * i] = c_[i];
    return out;
  }

  /// d/dz; the result has order N-1 (N when N = 0).
  PowerSeries derivative() const {
    const int n = std::max(order() - 1, 0);
    PowerSeries out(n);
    for (int i = 1; i <= order(); ++i) out.c_[i - 1] = c_[i] * T(i);
    return out;
  }

  PowerSeries& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend PowerSeries operator-(const PowerSeries& a) {
    PowerSeries out = a;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  friend PowerSeries operator*(PowerSeries a, const T& s) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    if constexpr (std::is_same_v<T, double>) {
      kernels::active().convolve(a.c_.data(), n + 1, b.c_.data(), n + 1, out.c_.data(), n + 1);
    } else {
      for (int i = 0; i <= n; ++i) {
        if (a.c_[i] == T(0)) continue;
        for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  static int checked(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
    return order;
  }
  std::vector<T> c_;
};

/// exp(s) to the order of s, via n f_n = sum_{k=1}^n k s_k f_{n-k}.
/// Exact mode requires a zero constant term; numeric mode factors out
/// exp(s_0).
template <class T>
PowerSeries<T> series_exp(const PowerSeries<T>& s) {
  const int n = s.order();
  PowerSeries<T> f(n);
  T c0 = s[0];
  if constexpr (PowerSeries<T>::exact) {
    if (!c0.is_zero()) throw std::domain_error("series_exp: nonzero constant term in exact mode");
    f[0] = T(1);
  } else {
    f[0] = std::exp(c0);
  }
  std::vector<T> ks(static_cast<std::size_t>(n) + 1, T(0));
  for (int k = 1; k <= n; ++k) ks[k] = s[k] * T(k);
  for (int i = 1; i <= n; ++i) {
    T acc(0);
    for (int k = 1; k <= i; ++k) {
      if (ks[k] == T(0)) continue;
      acc += ks[k] * f[i - k];
    }
    f[i] = acc / T(i);
  }
  return f;
}

template <class T>
T series_coefficient(const PowerSeries<T>& s, int n) {
  return s.coefficient(n);
}

}  // namespace mcl
