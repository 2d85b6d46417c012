#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mcl {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(BigInt(std::to_string(n))) {}  // NOLINT
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& e) : v_(BigInt(e)) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p". Rejects zero denominators and non-canonical
  /// input such as "2/4" when `strict` is set.
  static Rational parse(std::string_view text, bool strict = false);

  const mpq_class& raw() const { return v_; }
  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const;
  long double to_long_double() const;

  /// Always rendered as "p/q", including integers ("5/1").
  std::string str() const;

  Rational inverse() const;
  Rational pow(int exponent) const;
  Rational abs() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace mcl
