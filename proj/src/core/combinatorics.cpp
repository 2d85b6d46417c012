#include "mcl/core/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace mcl {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument " + std::to_string(n));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::domain_error("double_factorial: argument below -1: " + std::to_string(n));
  if (n <= 0) return 1;
  BigInt out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational combinatorial_scalar(CombinatorialKind kind, const std::vector<int>& args) {
  for (int a : args) {
    if (a < 0) throw std::domain_error("combinatorial_scalar: negative argument");
  }
  switch (kind) {
    case CombinatorialKind::factorial:
      if (args.size() != 1) throw std::invalid_argument("factorial takes one argument");
      return Rational(factorial(args[0]));
    case CombinatorialKind::double_factorial:
      if (args.size() != 1) throw std::invalid_argument("double_factorial takes one argument");
      return Rational(double_factorial(args[0]));
    case CombinatorialKind::binomial:
      if (args.size() != 2) throw std::invalid_argument("binomial takes two arguments");
      return Rational(binomial(args[0], args[1]));
  }
  throw std::invalid_argument("combinatorial_scalar: unknown kind");
}

Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
  for (int m = static_cast<int>(table.size()); m <= n; ++m) {
    Rational acc;
    for (int k = 0; k < m; ++k) {
      if (k > 1 && (k % 2) == 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
      acc += Rational(binomial(m + 1, k)) * table[static_cast<std::size_t>(k)];
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace mcl
