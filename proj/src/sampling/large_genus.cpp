#include "mcl/sampling/large_genus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mcl/intersection/correlators.hpp"
#include "mcl/kernels/kernels.hpp"

namespace mcl {
namespace {

double log_prefactor(int g, int k) {
  return std::lgamma(6.0 * g - 4 - 2 * k) - std::lgamma(g - k + 1.0) - std::lgamma(3.0 * g - 2 - k) +
         (3.0 * k - 3) * std::log(2.0) - (g - k) * std::log(3.0);
}

void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> j(static_cast<std::size_t>(k), 1);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      j[pos] = left;
      fn(j);
      return;
    }
    for (int v = 1; v <= left - (k - 1 - pos); ++v) {
      j[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
}

}  // namespace

LargeGenusSampler::LargeGenusSampler(int genus, const MultBound& m, double kappa, bool approx_correlators)
    : genus_(genus), n_(3 * genus - 3), kmax_(truncation_k_max(genus, kappa)), approx_(approx_correlators) {
  if (genus < 2) throw std::invalid_argument("large-genus sampler: genus must be at least 2");
  if (!approx_ && genus > kLargeGenusExactBudget) {
    throw std::out_of_range("large-genus sampler: exact correlators limited to genus " +
                            std::to_string(kLargeGenusExactBudget));
  }
  a_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  for (int j = 1; j <= n_; ++j) a_[j] = zeta_partial(m, 2 * j) / (2.0 * j);

  std::vector<double> logw;
  if (approx_) {
    const auto& kern = kernels::active();
    conv_.assign(static_cast<std::size_t>(kmax_) + 1, std::vector<double>(static_cast<std::size_t>(n_) + 1, 0.0));
    conv_[0][0] = 1;
    for (int q = 1; q <= kmax_; ++q) kern.convolve(conv_[q - 1].data(), conv_[q - 1].size(), a_.data(), a_.size(), conv_[q].data(), conv_[q].size());
    for (int k = 1; k <= kmax_; ++k) {
      logw.push_back(log_prefactor(genus, k) + std::log(conv_[k][n_]) - k * std::log(2.0) - std::lgamma(k + 1.0));
    }
  } else {
    comps_.resize(static_cast<std::size_t>(kmax_) + 1);
    comp_cdf_.resize(static_cast<std::size_t>(kmax_) + 1);
    for (int k = 1; k <= kmax_; ++k) {
      std::vector<double> w;
      double total = 0;
      for_each_composition(n_, k, [&](const std::vector<int>& j) {
        double t = c_coefficient(genus, k, j).to_double();
        for (int x : j) t *= a_[x];
        comps_[k].push_back(j);
        w.push_back(t);
        total += t;
      });
      double acc = 0;
      for (double x : w) comp_cdf_[k].push_back(acc += x / total);
      comp_cdf_[k].back() = 1;
      logw.push_back(log_prefactor(genus, k) + std::log(total) - k * std::log(2.0) - std::lgamma(k + 1.0));
    }
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  double total = 0;
  for (double lw : logw) total += std::exp(lw - top);
  double acc = 0;
  for (double lw : logw) {
    pk_.push_back(std::exp(lw - top) / total);
    kcdf_.push_back(acc += pk_.back());
  }
  kcdf_.back() = 1;
}

std::vector<std::pair<std::vector<int>, double>> LargeGenusSampler::composition_law(int k) const {
  std::vector<std::pair<std::vector<int>, double>> out;
  if (approx_) {
    for_each_composition(n_, k, [&](const std::vector<int>& j) {
      double t = 1;
      for (int x : j) t *= a_[x];
      out.emplace_back(j, t / conv_[k][n_]);
    });
  } else {
    for (std::size_t i = 0; i < comps_[k].size(); ++i) {
      out.emplace_back(comps_[k][i], comp_cdf_[k][i] - (i == 0 ? 0.0 : comp_cdf_[k][i - 1]));
    }
  }
  return out;
}

std::vector<int> LargeGenusSampler::sample_parts(int k, RandomStream& rs) const {
  if (!approx_) {
    const auto& cdf = comp_cdf_[k];
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), rs.uniform());
    return comps_[k][std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1)];
  }
  std::vector<int> parts;
  int left = n_;
  for (int q = k; q >= 2; --q) {
    // P(j) = a_j conv_{q-1}[left - j] / conv_q[left]
    const double target = rs.uniform() * conv_[q][left];
    double acc = 0;
    int chosen = 0;
    for (int j = 1; j <= left - (q - 1); ++j) {
      acc += a_[j] * conv_[q - 1][left - j];
      chosen = j;
      if (target < acc) break;
    }
    parts.push_back(chosen);
    left -= chosen;
  }
  parts.push_back(left);
  return parts;
}

LargeGenusSampler::Draw LargeGenusSampler::draw(RandomStream& rs) const {
  Draw d;
  const auto it = std::upper_bound(kcdf_.begin(), kcdf_.end(), rs.uniform());
  d.k = 1 + static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(it - kcdf_.begin()), kcdf_.size() - 1));
  d.parts = sample_parts(d.k, rs);
  std::vector<int> alpha;
  for (int j : d.parts) alpha.push_back(2 * j);
  d.lengths = {sample_dirichlet(alpha, rs), Ordering::unordered};
  return d;
}

}  // namespace mcl
