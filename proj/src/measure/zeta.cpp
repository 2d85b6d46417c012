#include "mcl/measure/zeta.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"

namespace mcl {

MultBound MultBound::finite(int m) {
  if (m < 1) throw std::invalid_argument("multiplicity bound must be positive");
  MultBound b;
  b.m_ = m;
  return b;
}

MultBound MultBound::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "+inf") return infinity();
  int m = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size() || m < 1) {
    throw std::invalid_argument("bad multiplicity bound '" + std::string(text) + "'");
  }
  return finite(m);
}

int MultBound::value() const {
  if (!m_) throw std::logic_error("MultBound: infinite bound has no integer value");
  return *m_;
}

std::string MultBound::str() const { return m_ ? std::to_string(*m_) : "inf"; }

Rational zeta_partial_exact(int m, int s) {
  if (m < 1 || s < 0) throw std::invalid_argument("zeta_partial_exact: need m >= 1 and s >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Rational> memo;
  std::lock_guard<std::mutex> lock(mu);
  const auto it = memo.find({m, s});
  if (it != memo.end()) return it->second;
  Rational z;
  for (int n = 1; n <= m; ++n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    z += Rational(BigInt(1), p);
  }
  memo.emplace(std::make_pair(m, s), z);
  return z;
}

PiScaled zeta_partial_scaled(const MultBound& m, int s) {
  if (!m.infinite()) return PiScaled(zeta_partial_exact(m.value(), s));
  if (s <= 1) throw std::domain_error("zeta(" + std::to_string(s) + ") diverges");
  if (s % 2 != 0) throw std::domain_error("zeta(" + std::to_string(s) + ") has no exact pi-power form");
  // zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!)
  const int j = s / 2;
  Rational c = bernoulli(s) * Rational(BigInt(1) << static_cast<unsigned>(s - 1)) / Rational(factorial(s));
  if (j % 2 == 0) c = -c;
  return PiScaled(c, 2 * s);
}

double zeta_partial(const MultBound& m, int s) {
  if (!m.infinite()) {
    if (m.value() < 1 || s < 0) throw std::invalid_argument("zeta_partial: need m >= 1 and s >= 0");
    if (s <= 40) return zeta_partial_exact(m.value(), s).to_double();
    double sum = 0;
    for (int mu = m.value(); mu >= 1; --mu) sum += std::pow(static_cast<double>(mu), -s);
    return sum;
  }
  if (s <= 1) throw std::domain_error("zeta(" + std::to_string(s) + ") diverges");
  if (s % 2 == 0 && s <= 40) return zeta_partial_scaled(m, s).to_double();
  return std::riemann_zeta(static_cast<double>(s));
}

}  // namespace mcl
