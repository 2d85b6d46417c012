#pragma once

#include <vector>

#include "mcl/sampling/samplers.hpp"

namespace mcl {

/// Largest genus for which the large-genus sampler computes c~ exactly.
inline constexpr int kLargeGenusExactBudget = 16;

/// Sampler for the truncated law restricted to the one-vertex graphs
/// Gamma_{g,k}, k <= kappa log(6g-6)/2. A draw picks k, then a
/// composition (j_1..j_k) of 3g-3 with weight c~(j) prod zeta_m(2j_i)/(2j_i),
/// then Dirichlet(2j_1, ..., 2j_k). With approx_correlators, c~ is replaced
/// by 1 and compositions are drawn from convolution powers of
/// a_j = zeta_m(2j)/(2j).
class LargeGenusSampler {
 public:
  LargeGenusSampler(int genus, const MultBound& m, double kappa, bool approx_correlators);

  struct Draw {
    int k = 0;
    std::vector<int> parts;
    LengthVector lengths;
  };

  int genus() const { return genus_; }
  int k_max() const { return kmax_; }
  /// P(k) for k = 1..k_max (index k-1).
  const std::vector<double>& k_probabilities() const { return pk_; }
  /// P(j | k) for every composition j of 3g-3 into k parts, by enumeration
  /// (approx mode uses the DP weights). Small genus only.
  std::vector<std::pair<std::vector<int>, double>> composition_law(int k) const;

  Draw draw(RandomStream& rs) const;
  LengthVector sample(RandomStream& rs) const { return draw(rs).lengths; }

 private:
  std::vector<int> sample_parts(int k, RandomStream& rs) const;

  int genus_, n_, kmax_;
  bool approx_;
  std::vector<double> a_;                  // a_[j], j = 1..n
  std::vector<std::vector<double>> conv_;  // conv_[q][t] = (a^{*q})[t]
  std::vector<double> pk_, kcdf_;
  // exact mode: per k, compositions and their cdf
  std::vector<std::vector<std::vector<int>>> comps_;
  std::vector<std::vector<double>> comp_cdf_;
};

}  // namespace mcl
