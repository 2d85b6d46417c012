#pragma once

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcl/core/rational.hpp"

namespace mcl {

/// (g; d_1 >= d_2 >= ... >= d_n). Construct through make() to sort.
struct CorrelatorKey {
  int genus = 0;
  std::vector<int> indices;

  static CorrelatorKey make(int genus, std::vector<int> indices);
  int n() const { return static_cast<int>(indices.size()); }
  bool stable() const { return 2 * genus - 2 + n() > 0; }
  bool dimension_ok() const;

  friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
};

/// File order: genus, then n, then indices.
bool cache_order(const CorrelatorKey& a, const CorrelatorKey& b);

/// Memoized psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g.
///
/// Values come from the string and dilaton equations when an index is 0
/// or 1, and from the DVV recursion on the largest index otherwise, down
/// to <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24. Lookups take a shared lock;
/// a miss takes the exclusive lock and fills the table recursively.
class CorrelatorTable {
 public:
  CorrelatorTable();

  /// Throws std::invalid_argument for unstable (g, n) or negative input.
  Rational get(int genus, std::vector<int> indices);

  /// DVV expansion of <tau_{d_1} tau_rest>_g in terms of table values,
  /// with d_1 the largest index (must be >= 1). Independent of how the
  /// entry itself was computed.
  Rational dvv_rhs(int genus, std::vector<int> indices);

  std::size_t size() const;
  std::vector<std::pair<CorrelatorKey, Rational>> entries() const;  // cache order

  /// Seeds the memo with externally stored values (cache load).
  void insert(const CorrelatorKey& key, const Rational& value);
  void clear();

  static CorrelatorTable& global();

 private:
  using Memo = std::map<std::vector<int>, Rational>;  // [g, d_1, ..., d_n]
  Rational compute(int genus, const std::vector<int>& sorted);
  Rational lookup_or_compute(int genus, std::vector<int> sorted);
  Rational dvv_unlocked(int genus, const std::vector<int>& sorted);

  mutable std::shared_mutex mu_;
  Memo memo_;
};

/// correlator: value from the process-wide table.
Rational correlator(int genus, const std::vector<int>& indices);

/// eps(d) with <tau_d>_g = (6g-5+2n)!! / prod (2d_i+1)!! / (g! 24^g) * (1 + eps).
Rational epsilon_aggarwal(int genus, const std::vector<int>& indices);

/// c~_{g,k}(j) = c_{g-k,k}(j_1 - 1, ..., j_k - 1).
Rational c_coefficient(int genus, int k, const std::vector<int>& j);

/// Prefactor A_{g,k} = (6g-5-2k)! / ((g-k)! (3g-3-k)!) * 2^{3k-3} / 3^{g-k}
/// such that F_{Gamma_{g,k}} = A_{g,k} sum_j c~(j) prod x_i^{2j_i-1}/(2j_i)!.
Rational single_vertex_prefactor(int genus, int k);

}  // namespace mcl
