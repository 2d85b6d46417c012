#include "mcl/intersection/volume.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"
#include "mcl/intersection/correlators.hpp"

namespace mcl {
namespace {

SparsePolynomial build(int genus, int n) {
  const int dim = 3 * genus - 3 + n;
  SparsePolynomial poly(SparsePolynomial::numbered_variables(n));
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(dim));
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  Exponents exps(static_cast<std::size_t>(n), 0);
  // compositions of dim into n nonnegative parts
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      d[pos] = left;
      BigInt den = p2;
      for (int i = 0; i < n; ++i) {
        den *= factorial(d[i]);
        exps[i] = 2 * d[i];
      }
      poly.add_term(exps, correlator(genus, d) / Rational(den));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, dim);
  return poly;
}

}  // namespace

const SparsePolynomial& volume_polynomial(int genus, int n) {
  if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0) {
    throw std::invalid_argument("volume_polynomial: unstable (g, n) = (" + std::to_string(genus) + ", " +
                                std::to_string(n) + ")");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, SparsePolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = memo.find({genus, n});
    if (it != memo.end()) return it->second;
  }
  SparsePolynomial p = build(genus, n);
  std::lock_guard<std::mutex> lock(mu);
  return memo.try_emplace({genus, n}, std::move(p)).first->second;
}

}  // namespace mcl
