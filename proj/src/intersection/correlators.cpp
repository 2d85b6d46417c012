#include "mcl/intersection/correlators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>

#include "mcl/core/combinatorics.hpp"

namespace mcl {
namespace {

std::vector<int> memo_key(int genus, const std::vector<int>& sorted) {
  std::vector<int> key;
  key.reserve(sorted.size() + 1);
  key.push_back(genus);
  key.insert(key.end(), sorted.begin(), sorted.end());
  return key;
}

void sort_desc(std::vector<int>& d) { std::sort(d.begin(), d.end(), std::greater<>()); }

// (2a+1)!! as a Rational, with (-1)!! = 1.
const Rational& odd_df(int a) {
  static std::mutex mu;
  static std::deque<Rational> table;
  std::lock_guard<std::mutex> lock(mu);
  const int idx = a + 1;  // a >= -1
  while (static_cast<int>(table.size()) <= idx) {
    const int b = static_cast<int>(table.size()) - 1;
    table.emplace_back(double_factorial(2 * b + 1));
  }
  return table[static_cast<std::size_t>(idx)];
}

}  // namespace

CorrelatorKey CorrelatorKey::make(int genus, std::vector<int> indices) {
  sort_desc(indices);
  return CorrelatorKey{genus, std::move(indices)};
}

bool CorrelatorKey::dimension_ok() const {
  const int sum = std::accumulate(indices.begin(), indices.end(), 0);
  return sum == 3 * genus - 3 + n();
}

bool cache_order(const CorrelatorKey& a, const CorrelatorKey& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  if (a.n() != b.n()) return a.n() < b.n();
  return a.indices < b.indices;
}

CorrelatorTable::CorrelatorTable() = default;

CorrelatorTable& CorrelatorTable::global() {
  static CorrelatorTable table;
  return table;
}

Rational CorrelatorTable::get(int genus, std::vector<int> indices) {
  if (genus < 0) throw std::invalid_argument("correlator: negative genus");
  for (int d : indices) {
    if (d < 0) throw std::invalid_argument("correlator: negative index");
  }
  const CorrelatorKey key = CorrelatorKey::make(genus, std::move(indices));
  if (!key.stable()) {
    throw std::invalid_argument("correlator: unstable (g, n) = (" + std::to_string(genus) + ", " +
                                std::to_string(key.n()) + ")");
  }
  if (!key.dimension_ok()) return Rational(0);
  const auto mk = memo_key(key.genus, key.indices);
  {
    std::shared_lock lock(mu_);
    const auto it = memo_.find(mk);
    if (it != memo_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  return lookup_or_compute(key.genus, key.indices);
}

Rational CorrelatorTable::lookup_or_compute(int genus, std::vector<int> sorted) {
  if (genus < 0) return Rational(0);
  const CorrelatorKey key{genus, std::move(sorted)};
  if (!key.stable() || !key.dimension_ok()) return Rational(0);
  auto mk = memo_key(genus, key.indices);
  const auto it = memo_.find(mk);
  if (it != memo_.end()) return it->second;
  Rational v = compute(genus, key.indices);
  memo_.emplace(std::move(mk), v);
  return v;
}

Rational CorrelatorTable::compute(int genus, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  if (genus == 0 && d == std::vector<int>{0, 0, 0}) return Rational(1);
  if (genus == 1 && d == std::vector<int>{1}) return Rational(1, 24);

  if (d.back() == 0) {
    // string equation
    std::vector<int> rest(d.begin(), d.end() - 1);
    Rational acc;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) break;
      if (j > 0 && rest[j] == rest[j - 1]) continue;
      const auto mult = std::count(rest.begin(), rest.end(), rest[j]);
      std::vector<int> lowered = rest;
      lowered[j] -= 1;
      sort_desc(lowered);
      acc += Rational(static_cast<long>(mult)) * lookup_or_compute(genus, lowered);
    }
    return acc;
  }
  const auto one = std::find(d.begin(), d.end(), 1);
  if (one != d.end()) {
    // dilaton equation
    std::vector<int> rest = d;
    rest.erase(rest.begin() + (one - d.begin()));
    return Rational(2 * genus - 2 + n - 1) * lookup_or_compute(genus, rest);
  }
  return dvv_unlocked(genus, d);
}

Rational CorrelatorTable::dvv_unlocked(int genus, const std::vector<int>& d) {
  const int k = d.front() - 1;
  const std::vector<int> x(d.begin() + 1, d.end());
  Rational acc;

  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j > 0 && x[j] == x[j - 1]) continue;
    const auto mult = std::count(x.begin(), x.end(), x[j]);
    std::vector<int> y = x;
    y[j] = k + x[j];
    sort_desc(y);
    const Rational c = odd_df(k + x[j]) / odd_df(x[j] - 1);
    acc += Rational(static_cast<long>(mult)) * c * lookup_or_compute(genus, y);
  }

  if (k >= 1) {
    // distinct values of x with their multiplicities, for multiset splits
    std::vector<int> vals, counts;
    for (int v : x) {
      if (!vals.empty() && vals.back() == v) {
        ++counts.back();
      } else {
        vals.push_back(v);
        counts.push_back(1);
      }
    }
    Rational half_sum;
    for (int r = 0; r <= k - 1; ++r) {
      const int s = k - 1 - r;
      const Rational w = odd_df(r) * odd_df(s);
      if (genus >= 1) {
        std::vector<int> y = x;
        y.push_back(r);
        y.push_back(s);
        sort_desc(y);
        half_sum += w * lookup_or_compute(genus - 1, y);
      }
      // splits I u J = x, g1 + g2 = genus
      std::vector<int> take(vals.size(), 0);
      while (true) {
        std::vector<int> left{r}, right{s};
        BigInt ways = 1;
        int sum_left = r, n_left = 1;
        for (std::size_t t = 0; t < vals.size(); ++t) {
          for (int c = 0; c < take[t]; ++c) left.push_back(vals[t]);
          for (int c = take[t]; c < counts[t]; ++c) right.push_back(vals[t]);
          ways *= binomial(counts[t], take[t]);
          sum_left += vals[t] * take[t];
          n_left += take[t];
        }
        // dimension fixes g1: sum = 3 g1 - 3 + n
        const int num = sum_left - n_left + 3;
        if (num >= 0 && num % 3 == 0) {
          const int g1 = num / 3;
          const int g2 = genus - g1;
          if (g2 >= 0) {
            sort_desc(left);
            sort_desc(right);
            const Rational a = lookup_or_compute(g1, left);
            if (!a.is_zero()) {
              const Rational b = lookup_or_compute(g2, right);
              if (!b.is_zero()) half_sum += w * Rational(ways) * a * b;
            }
          }
        }
        std::size_t t = 0;
        while (t < take.size() && take[t] == counts[t]) take[t++] = 0;
        if (t == take.size()) break;
        ++take[t];
      }
    }
    acc += half_sum / Rational(2);
  }
  return acc / odd_df(k + 1);
}

Rational CorrelatorTable::dvv_rhs(int genus, std::vector<int> indices) {
  sort_desc(indices);
  if (indices.empty() || indices.front() < 1) {
    throw std::invalid_argument("dvv_rhs: largest index must be at least 1");
  }
  std::unique_lock lock(mu_);
  return dvv_unlocked(genus, indices);
}

std::size_t CorrelatorTable::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

std::vector<std::pair<CorrelatorKey, Rational>> CorrelatorTable::entries() const {
  std::vector<std::pair<CorrelatorKey, Rational>> out;
  {
    std::shared_lock lock(mu_);
    out.reserve(memo_.size());
    for (const auto& [k, v] : memo_) {
      out.emplace_back(CorrelatorKey{k.front(), std::vector<int>(k.begin() + 1, k.end())}, v);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return cache_order(a.first, b.first); });
  return out;
}

void CorrelatorTable::insert(const CorrelatorKey& key, const Rational& value) {
  std::unique_lock lock(mu_);
  memo_[memo_key(key.genus, key.indices)] = value;
}

void CorrelatorTable::clear() {
  std::unique_lock lock(mu_);
  memo_.clear();
}

Rational correlator(int genus, const std::vector<int>& indices) {
  return CorrelatorTable::global().get(genus, indices);
}

Rational epsilon_aggarwal(int genus, const std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  const CorrelatorKey key = CorrelatorKey::make(genus, indices);
  if (!key.stable()) throw std::invalid_argument("epsilon_aggarwal: unstable (g, n)");
  if (!key.dimension_ok()) throw std::invalid_argument("epsilon_aggarwal: dimension constraint fails");
  BigInt den = factorial(genus);
  BigInt p24;
  mpz_ui_pow_ui(p24.get_mpz_t(), 24, static_cast<unsigned long>(genus));
  den *= p24;
  for (int d : indices) den *= double_factorial(2 * d + 1);
  const Rational predicted(double_factorial(6 * genus - 5 + 2 * n), den);
  if (predicted.is_zero()) throw std::domain_error("epsilon_aggarwal: zero prediction");
  return correlator(genus, indices) / predicted - Rational(1);
}

Rational c_coefficient(int genus, int k, const std::vector<int>& j) {
  if (k < 1 || static_cast<int>(j.size()) != k) {
    throw std::invalid_argument("c_coefficient: need k >= 1 parts");
  }
  if (k > genus) throw std::invalid_argument("c_coefficient: k > g");
  int sum = 0;
  for (int v : j) {
    if (v < 1) throw std::invalid_argument("c_coefficient: parts must be >= 1");
    sum += v;
  }
  if (sum != 3 * genus - 3) throw std::invalid_argument("c_coefficient: parts must sum to 3g-3");
  const int h = genus - k;  // genus of the vertex
  if (2 * h - 2 + 2 * k <= 0) throw std::invalid_argument("c_coefficient: unstable vertex");

  BigInt p3, p2;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(h));
  const int e2 = 3 * h - 6 + 5 * k;
  Rational pref = Rational(BigInt(factorial(h) * factorial(3 * h - 3 + 2 * k) * p3)) /
                  Rational(factorial(6 * h - 5 + 4 * k));
  if (e2 >= 0) {
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e2));
    pref /= Rational(p2);
  } else {
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e2));
    pref *= Rational(p2);
  }
  std::vector<int> d(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    d[i] = j[i] - 1;
    pref *= Rational(factorial(2 * d[i] + 2));
  }

  // sum over splits d_i = a_i + b_i
  Rational acc;
  std::vector<int> a(d.size(), 0);
  while (true) {
    std::vector<int> idx;
    BigInt den = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      idx.push_back(a[i]);
      idx.push_back(d[i] - a[i]);
      den *= factorial(a[i]) * factorial(d[i] - a[i]);
    }
    acc += correlator(h, idx) / Rational(den);
    std::size_t t = 0;
    while (t < a.size() && a[t] == d[t]) a[t++] = 0;
    if (t == a.size()) break;
    ++a[t];
  }
  return pref * acc;
}

Rational single_vertex_prefactor(int genus, int k) {
  if (k < 1 || k > genus) throw std::invalid_argument("single_vertex_prefactor: need 1 <= k <= g");
  BigInt p3, p2;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(genus - k));
  Rational out(factorial(6 * genus - 5 - 2 * k), factorial(genus - k) * factorial(3 * genus - 3 - k) * p3);
  const int e2 = 3 * k - 3;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e2));
  return out * Rational(p2);
}

}  // namespace mcl
