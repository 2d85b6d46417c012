#include "mcl/core/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mcl {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text, bool strict) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
      }
    }
    return BigInt(part, 10);
  };
  Rational out;
  if (slash == std::string::npos) {
    out = Rational(parse_int(s));
  } else {
    const BigInt num = parse_int(s.substr(0, slash));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("Rational::parse: nonpositive denominator in '" + s + "'");
    out = Rational(num, den);
  }
  if (strict && out.str() != s) {
    throw std::invalid_argument("Rational::parse: non-canonical '" + s + "'");
  }
  return out;
}

double Rational::to_double() const {
  return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const {
  const BigInt& n = v_.get_num();
  const BigInt& d = v_.get_den();
  if (n == 0) return 0.0L;
  // Keep 64+ significant bits of each side before dividing.
  const long shift_n = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 70;
  const long shift_d = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 70;
  BigInt tn = n;
  BigInt td = d;
  if (shift_n > 0) mpz_tdiv_q_2exp(tn.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift_n));
  if (shift_d > 0) mpz_tdiv_q_2exp(td.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(shift_d));
  auto to_ld = [](const BigInt& z) {
    long double r = 0.0L;
    const std::string digits = z.get_str(16);
    bool neg = false;
    for (char c : digits) {
      if (c == '-') { neg = true; continue; }
      const int v = (c >= '0' && c <= '9') ? c - '0' : c - 'a' + 10;
      r = r * 16.0L + static_cast<long double>(v);
    }
    return neg ? -r : r;
  };
  const long double q = to_ld(tn) / to_ld(td);
  return std::ldexp(q, static_cast<int>(std::max(shift_n, 0L) - std::max(shift_d, 0L)));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out;
  out.v_ = mpq_class(n, d);  // already coprime
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace mcl
