#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mcl/measure/multicurve_measure.hpp"
#include "mcl/sampling/random_stream.hpp"

namespace mcl {

enum class Ordering { unordered, sorted_desc, size_biased };
const char* ordering_name(Ordering o);

/// Finite nonnegative vector, implicitly padded with zeros.
struct LengthVector {
  std::vector<double> values;
  Ordering ordering = Ordering::unordered;

  double sum() const;
  /// Throws std::logic_error unless the entries sum to 1 within tol (and
  /// are nonincreasing when sorted_desc).
  void validate(double tol = 1e-12) const;
};

LengthVector sorted_desc(LengthVector v);

struct TopologicalTypeSample {
  const StableGraph* graph = nullptr;  // owned by the sampler
  std::string canonical;
  std::vector<int> multiplicities;
  Exponents monomial;
};

/// Exact sampler for the law of the length vector of a random multicurve:
/// a graph with probability proportional to its weight, then a monomial of
/// F_Gamma by coeff * prod n_e! zeta_m(n_e+1), then per-edge multiplicities
/// with P(m_e = mu) proportional to mu^-(n_e+1), then Dirichlet(n_e + 1) lengths.
class MulticurveSampler {
 public:
  /// Every stable graph of genus g, weighted by Z_m(F_Gamma)/|Aut|.
  static MulticurveSampler full(int genus, const MultBound& m, int threads = 1);
  /// Only Gamma_{g,k} with k <= kappa log(6g-6)/2, weighted by Z_m(F_{g,k})/(2^k k!).
  static MulticurveSampler truncated(int genus, const MultBound& m, double kappa);

  int genus() const { return genus_; }
  const MultBound& bound() const { return bound_; }
  std::size_t graph_count() const { return graphs_.size(); }
  const StableGraph& graph(std::size_t i) const { return graphs_[i]; }
  const std::string& canonical(std::size_t i) const { return names_[i]; }
  double probability(std::size_t i) const;

  TopologicalTypeSample sample_type(RandomStream& rs) const;
  LengthVector sample_lengths(const TopologicalTypeSample& t, RandomStream& rs) const;
  /// sample_type followed by sample_lengths.
  LengthVector sample(RandomStream& rs) const;

 private:
  struct Monomials {
    std::vector<Exponents> exps;
    std::vector<double> cdf;
  };
  MulticurveSampler(int genus, MultBound m) : genus_(genus), bound_(m) {}
  const Monomials& monomials(std::size_t i) const;

  int genus_;
  MultBound bound_;
  std::vector<StableGraph> graphs_;
  std::vector<std::string> names_;
  std::vector<double> cdf_;
  std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  mutable std::vector<std::unique_ptr<Monomials>> mono_;
};

/// P(m_e = mu) = mu^-s / zeta_m(s), sampled by inversion. At m = inf the
/// first kZetaTableSize terms are tabulated and the tail is inverted through
/// its Euler-Maclaurin expansion.
/// Values beyond INT_MAX are clamped.
int sample_truncated_zeta(int s, const MultBound& m, RandomStream& rs);
inline constexpr int kZetaTableSize = 4096;

/// Dirichlet with integer parameters.
std::vector<double> sample_dirichlet(const std::vector<int>& alpha, RandomStream& rs);

/// First pick i with probability x_i / sum x, then repeat on the rest;
/// once only zeros remain they follow in uniformly random order.
LengthVector size_biased_reorder(const LengthVector& v, RandomStream& rs);

/// Default truncation for GEM: enough sticks that the expected leftover
/// mass (theta/(1+theta))^k drops below 1e-12.
int gem_default_length(double theta);

/// First k GEM(theta) coordinates, Beta(1, theta) by inversion. The
/// remainder 1 - sum is the undrawn tail.
LengthVector gem_sample(double theta, int k, RandomStream& rs);
/// gem_sample with the same stream, sorted decreasingly.
LengthVector pd_sample(double theta, int k, RandomStream& rs);

/// Normalized sorted cycle lengths of an Ewens(theta) permutation of size
/// n (Feller coupling).
LengthVector sample_ewens_cycles(int n, double theta, RandomStream& rs);

}  // namespace mcl
