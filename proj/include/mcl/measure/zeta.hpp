#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcl/core/pi_scaled.hpp"

namespace mcl {

/// Multiplicity bound m: a positive integer or +infinity.
class MultBound {
 public:
  static MultBound finite(int m);
  static MultBound infinity() { return MultBound(); }
  /// Accepts a positive integer, "inf" or "infinity".
  static MultBound parse(std::string_view text);

  bool infinite() const { return !m_; }
  int value() const;  // throws when infinite
  std::string str() const;

  friend bool operator==(const MultBound&, const MultBound&) = default;

 private:
  MultBound() = default;
  std::optional<int> m_;
};

/// zeta_m(s) = sum_{n <= m} n^{-s}, exact for finite m (memoized).
Rational zeta_partial_exact(int m, int s);

/// zeta_m(s) as coeff * pi^(s') for every finite m and for m = inf with s
/// even (from Bernoulli numbers). Throws std::domain_error for odd s at
/// m = inf and for s <= 1 there.
PiScaled zeta_partial_scaled(const MultBound& m, int s);

/// Floating-point zeta_m(s); any s >= 2 at m = inf.
double zeta_partial(const MultBound& m, int s);

}  // namespace mcl
