#include "mcl/core/pi_scaled.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"

namespace mcl {

Rational PiScaled::rational() const {
  if (!is_rational()) throw std::logic_error("PiScaled: value " + str() + " is not rational");
  return coeff;
}

double PiScaled::to_double() const {
  return static_cast<double>(to_long_double());
}

long double PiScaled::to_long_double() const {
  const long double sqrt_pi = std::sqrt(std::numbers::pi_v<long double>);
  return coeff.to_long_double() * std::pow(sqrt_pi, static_cast<long double>(sqrt_pi_power));
}

std::string PiScaled::str() const {
  if (is_rational()) return coeff.str();
  if (sqrt_pi_power == 1) return coeff.str() + "*sqrt(pi)";
  if (sqrt_pi_power % 2 == 0) return coeff.str() + "*pi^" + std::to_string(sqrt_pi_power / 2);
  return coeff.str() + "*sqrt(pi)^" + std::to_string(sqrt_pi_power);
}

PiScaled& PiScaled::operator*=(const PiScaled& o) {
  coeff *= o.coeff;
  sqrt_pi_power += o.sqrt_pi_power;
  return *this;
}

PiScaled& PiScaled::operator/=(const PiScaled& o) {
  coeff /= o.coeff;
  sqrt_pi_power -= o.sqrt_pi_power;
  return *this;
}

PiScaled& PiScaled::operator+=(const PiScaled& o) {
  if (o.coeff.is_zero()) return *this;
  if (coeff.is_zero()) return *this = o;
  if (sqrt_pi_power != o.sqrt_pi_power) {
    throw std::logic_error("PiScaled: adding " + str() + " and " + o.str());
  }
  coeff += o.coeff;
  return *this;
}

bool operator==(const PiScaled& a, const PiScaled& b) {
  if (a.coeff.is_zero() || b.coeff.is_zero()) return a.coeff == b.coeff;
  return a.coeff == b.coeff && a.sqrt_pi_power == b.sqrt_pi_power;
}

PiScaled gamma_half(int k) {
  if (k < 0) throw std::domain_error("gamma_half: negative k");
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return PiScaled(Rational(factorial(2 * k), four_pow * factorial(k)), 1);
}

}  // namespace mcl
