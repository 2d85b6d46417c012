#pragma once

#include <string>

#include "mcl/core/rational.hpp"

namespace mcl {

/// Exact value coeff * sqrt(pi)^sqrt_pi_power.
///
/// Covers half-integer Gamma values (power 1), even zeta values
/// (power 2s), and their products and quotients. Addition is only defined
/// between values carrying the same power of sqrt(pi).
struct PiScaled {
  Rational coeff;
  int sqrt_pi_power = 0;

  PiScaled() = default;
  PiScaled(Rational c, int power = 0) : coeff(std::move(c)), sqrt_pi_power(power) {}  // NOLINT

  bool is_rational() const { return sqrt_pi_power == 0 || coeff.is_zero(); }
  /// The rational value; throws if a nonzero power of sqrt(pi) remains.
  Rational rational() const;
  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  PiScaled& operator*=(const PiScaled& o);
  PiScaled& operator/=(const PiScaled& o);
  PiScaled& operator+=(const PiScaled& o);

  friend PiScaled operator*(PiScaled a, const PiScaled& b) { return a *= b; }
  friend PiScaled operator/(PiScaled a, const PiScaled& b) { return a /= b; }
  friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
  friend bool operator==(const PiScaled& a, const PiScaled& b);
};

/// Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi), exactly.
PiScaled gamma_half(int k);

}  // namespace mcl
