#include <random>

#include "doctest.h"
#include "mcl/core/combinatorics.hpp"
#include "mcl/core/pi_scaled.hpp"
#include "mcl/core/polynomial.hpp"
#include "mcl/core/power_series.hpp"
#include "mcl/core/rational.hpp"

using namespace mcl;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

SparsePolynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  SparsePolynomial p(vars);
  std::uniform_int_distribution<int> e(0, 3), c(-9, 9), terms(1, 5);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents ex(vars.size());
    for (auto& v : ex) v = e(rng);
    p.add_term(ex, q(c(rng), 1 + (c(rng) + 9) % 4));
  }
  return p;
}

}  // namespace

TEST_CASE("rational stays in lowest terms") {
  const Rational a = q(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK_THROWS(q(1, 2) / Rational(0));
  CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("rational parse and print round trip") {
  CHECK(Rational::parse("10/4") == q(5, 2));
  CHECK(Rational::parse("-7") == q(-7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("a/2"));
  CHECK_THROWS(Rational::parse("10/4", true));
  const Rational big = Rational(factorial(40)) / Rational(factorial(23));
  CHECK(Rational::parse(big.str(), true) == big);
}

TEST_CASE("rational conversion to floating point") {
  CHECK(q(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(q(-22, 7).to_long_double() == doctest::Approx(-22.0L / 7.0L).epsilon(1e-18));
  const Rational tiny = Rational(1) / Rational(factorial(100));
  CHECK(tiny.to_double() == doctest::Approx(1.0715102881254669e-158).epsilon(1e-14));
  CHECK(Rational(factorial(30)).to_double() == 265252859812191058636308480000000.0);
}

TEST_CASE("combinatorial scalars") {
  CHECK(combinatorial_scalar(CombinatorialKind::double_factorial, {5}) == q(15));
  CHECK(combinatorial_scalar(CombinatorialKind::factorial, {0}) == q(1));
  CHECK(combinatorial_scalar(CombinatorialKind::binomial, {6, 3}) == q(20));
  CHECK_THROWS(combinatorial_scalar(CombinatorialKind::factorial, {-1}));
  CHECK_THROWS(combinatorial_scalar(CombinatorialKind::binomial, {3, -1}));
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(9) == 945);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == q(1));
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(3) == q(0));
  CHECK(bernoulli(4) == q(-1, 30));
  CHECK(bernoulli(12) == q(-691, 2730));
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(0) == PiScaled(q(1), 1));
  CHECK(gamma_half(1) == PiScaled(q(1, 2), 1));
  CHECK(gamma_half(2) == PiScaled(q(3, 4), 1));
  CHECK_THROWS(gamma_half(-1));
  for (int k = 0; k <= 64; ++k) {
    CHECK(gamma_half(k + 1) == PiScaled(q(2 * k + 1, 2), 0) * gamma_half(k));
  }
  const PiScaled sq = gamma_half(0) * gamma_half(0);
  CHECK(sq.sqrt_pi_power == 2);
  CHECK(sq.to_double() == doctest::Approx(3.141592653589793));
  CHECK_THROWS(gamma_half(1).rational());
  CHECK((gamma_half(3) / gamma_half(1)).rational() == q(15, 4));
}

TEST_CASE("polynomial arithmetic") {
  const std::vector<std::string> x{"x"};
  const auto xp1 = SparsePolynomial::monomial(x, {1}, 1) + SparsePolynomial::constant(1, x);
  const auto xm1 = SparsePolynomial::monomial(x, {1}, 1) - SparsePolynomial::constant(1, x);
  const auto prod = poly_arith(xp1, xm1, PolyOp::mul);
  CHECK(prod.term_count() == 2);
  CHECK(prod.coefficient({2}) == q(1));
  CHECK(prod.coefficient({0}) == q(-1));
  CHECK((xp1 * SparsePolynomial(x)).is_zero());

  const auto a = SparsePolynomial::monomial({"a"}, {1}, 1);
  const auto b = SparsePolynomial::monomial({"b"}, {2}, 3);
  const auto ab = a * b;
  CHECK(ab.variables() == std::vector<std::string>{"a", "b"});
  CHECK(ab.coefficient({1, 2}) == q(3));
}

TEST_CASE("polynomial relabel merges variables") {
  // V_{1,2}(x1,x2) = (x1^2+x2^2)^2/192; loop substitution x1=x2=a
  const auto vars = SparsePolynomial::numbered_variables(2);
  SparsePolynomial v(vars);
  v.add_term({4, 0}, q(1, 192));
  v.add_term({2, 2}, q(2, 192));
  v.add_term({0, 4}, q(1, 192));
  const std::vector<int> target{0, 0};
  const auto merged = v.relabel(target, {"a"});
  const auto fa = SparsePolynomial::monomial({"a"}, {1}, 1) * merged;
  CHECK(fa.term_count() == 1);
  CHECK(fa.coefficient({5}) == q(1, 48));
}

TEST_CASE("polynomial substitute scale") {
  const auto x3 = SparsePolynomial::monomial({"x"}, {3}, 1);
  const std::vector<Rational> two{q(2)};
  CHECK(x3.substitute_scale(two).coefficient({3}) == q(1, 8));
  const auto c = SparsePolynomial::constant(q(7), {"x"});
  CHECK(c.substitute_scale(two) == c);
  const std::vector<Rational> zero{q(0)};
  CHECK_THROWS(x3.substitute_scale(zero));
}

TEST_CASE("polynomial product evaluates to product of evaluations") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"u", "v", "w"};
  std::uniform_int_distribution<int> c(-7, 7), d(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(rng, vars);
    const auto r = random_poly(rng, vars);
    const std::vector<Rational> pt{q(c(rng), d(rng)), q(c(rng), d(rng)), q(c(rng), d(rng))};
    CHECK((p * r).evaluate(pt) == p.evaluate(pt) * r.evaluate(pt));
    CHECK((p + r).evaluate(pt) == p.evaluate(pt) + r.evaluate(pt));
  }
}

TEST_CASE("power series exp") {
  PowerSeries<Rational> z = PowerSeries<Rational>::monomial(10, 1);
  const auto ez = series_exp(z);
  for (int k = 0; k <= 10; ++k) CHECK(ez[k] == Rational(1) / Rational(factorial(k)));
  CHECK(series_exp(PowerSeries<Rational>(5)) == PowerSeries<Rational>::monomial(5, 0));

  PowerSeries<Rational> s(6);
  s[1] = 1;
  s[2] = 1;
  CHECK(series_exp(s)[2] == q(3, 2));

  PowerSeries<Rational> bad(3);
  bad[0] = 1;
  CHECK_THROWS(series_exp(bad));

  PowerSeries<double> num(4);
  num[0] = 1.0;
  CHECK(series_exp(num)[0] == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("power series exp(s)*exp(-s) = 1") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-5, 5), d(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    PowerSeries<Rational> s(12);
    for (int i = 1; i <= 12; ++i) s[i] = q(c(rng), d(rng));
    const auto one = series_exp(s) * series_exp(-s);
    CHECK(one == PowerSeries<Rational>::monomial(12, 0));
  }
}

TEST_CASE("power series coefficient and truncation") {
  PowerSeries<Rational> geo(6);
  for (int i = 0; i <= 6; ++i) geo[i] = 1;
  CHECK(series_coefficient(geo, 2) == q(1));
  CHECK_THROWS(series_coefficient(geo, 7));
  const auto e2 = series_exp(PowerSeries<Rational>::monomial(8, 2));
  CHECK(e2[4] == q(1, 2));
  // mixed orders truncate to the smaller one
  const auto prod = geo * PowerSeries<Rational>::monomial(3, 0);
  CHECK(prod.order() == 3);
  CHECK_THROWS(PowerSeries<Rational>(-1));
}

TEST_CASE("power series double product matches exact product") {
  PowerSeries<Rational> a(40), b(40);
  PowerSeries<double> ad(40), bd(40);
  for (int i = 0; i <= 40; ++i) {
    a[i] = q(i % 7 - 3, 1 + i % 5);
    b[i] = q(2 - i % 4, 1 + i % 3);
    ad[i] = a[i].to_double();
    bd[i] = b[i].to_double();
  }
  const auto pe = a * b;
  const auto pd = ad * bd;
  for (int i = 0; i <= 40; ++i) CHECK(pd[i] == doctest::Approx(pe[i].to_double()).epsilon(1e-13));
}
