#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mcl/moments/moments.hpp"

namespace mcl {

double exp_integral_e1(double x) {
  if (!(x > 0)) throw std::domain_error("exp_integral_e1: x must be positive");
  if (x <= 1) {
    double sum = 0, term = 1;
    for (int k = 1; k < 60; ++k) {
      term *= -x / k;
      const double add = term / k;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
  }
  // modified Lentz on e^-x / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
  const double tiny = 1e-300;
  double b = x + 1, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2;
    d = 1 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1) < 1e-16) break;
  }
  return h * std::exp(-x);
}

// E V_j^n = Gamma(theta+1)/Gamma(theta+n) int_0^inf (theta E1(x))^{j-1}/(j-1)! x^{n-1} e^{-x - theta E1(x)} dx,
// integrated in u = log x.
double pd_marginal_moment(double theta, int j, int n) {
  if (!(theta > 0) || j < 1 || n < 1) throw std::invalid_argument("pd_marginal_moment: need theta > 0, j >= 1, n >= 1");
  const double log_front = std::lgamma(theta + 1) - std::lgamma(theta + n) - std::lgamma(static_cast<double>(j));
  auto f = [&](double u) {
    const double x = std::exp(u);
    const double e1 = u < -30 ? -std::numbers::egamma - u + x : exp_integral_e1(x);
    const double te = theta * e1;
    const double lg = log_front + (j - 1) * std::log(te) + n * u - x - te;
    return std::exp(lg);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  // the integrand peaks near u = log n and dies like e^{(n+theta)u} on the left
  const double lo = -(40.0 + 4.0 * j) / (theta + n);
  const double hi = std::log(n + 60.0 + 10.0 * j);
  double total = 0;
  const int pieces = 16;
  for (int i = 0; i < pieces; ++i) {
    const double a = lo + (hi - lo) * i / pieces, b = lo + (hi - lo) * (i + 1) / pieces;
    total += GK::integrate(f, a, b, 15, 1e-13);
  }
  return total;
}

}  // namespace mcl
