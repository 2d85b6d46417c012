#include "mcl/sampling/samplers.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mcl/core/combinatorics.hpp"

namespace mcl {
namespace {

std::vector<double> normalized_cdf(const std::vector<double>& w) {
  std::vector<double> cdf(w.size());
  double acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] >= 0) || !std::isfinite(w[i])) throw std::logic_error("sampler: bad weight");
    acc += w[i];
    cdf[i] = acc;
  }
  if (!(acc > 0)) throw std::logic_error("sampler: all weights vanish");
  for (auto& c : cdf) c /= acc;
  cdf.back() = 1.0;
  return cdf;
}

std::size_t pick(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

// prefix[mu] = sum_{nu <= mu} nu^-s
struct ZetaTable {
  std::vector<double> prefix;
  double total = 0;
};

const ZetaTable& zeta_table(int s, const MultBound& m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ZetaTable>> memo;
  const int key = m.infinite() ? 0 : m.value();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{s, key}];
  if (!slot) {
    slot = std::make_unique<ZetaTable>();
    const int n = m.infinite() ? kZetaTableSize : m.value();
    slot->prefix.assign(static_cast<std::size_t>(n) + 1, 0.0);
    // summed from the small terms up for accuracy, then turned into prefixes
    for (int k = n; k >= 1; --k) slot->prefix[k] = std::pow(static_cast<double>(k), -s);
    for (int k = 1; k <= n; ++k) slot->prefix[k] += slot->prefix[k - 1];
    slot->total = m.infinite() ? zeta_partial(m, s) : slot->prefix[n];
  }
  return *slot;
}

// sum_{nu > mu} nu^-s by Euler-Maclaurin
double zeta_tail(double mu, int s) {
  return std::pow(mu, 1.0 - s) / (s - 1) - 0.5 * std::pow(mu, -s) + s * std::pow(mu, -s - 1.0) / 12.0;
}

}  // namespace

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::unordered: return "unordered";
    case Ordering::sorted_desc: return "sorted_desc";
    case Ordering::size_biased: return "size_biased";
  }
  return "?";
}

double LengthVector::sum() const {
  double s = 0;
  for (double v : values) s += v;
  return s;
}

void LengthVector::validate(double tol) const {
  for (double v : values) {
    if (!(v >= 0)) throw std::logic_error("LengthVector: negative or NaN entry");
  }
  if (std::abs(sum() - 1.0) > tol) throw std::logic_error("LengthVector: entries do not sum to 1");
  if (ordering == Ordering::sorted_desc && !std::is_sorted(values.rbegin(), values.rend())) {
    throw std::logic_error("LengthVector: sorted_desc vector is not nonincreasing");
  }
}

LengthVector sorted_desc(LengthVector v) {
  std::sort(v.values.begin(), v.values.end(), std::greater<>());
  v.ordering = Ordering::sorted_desc;
  return v;
}

int sample_truncated_zeta(int s, const MultBound& m, RandomStream& rs) {
  if (s < 2 && m.infinite()) throw std::domain_error("sample_truncated_zeta: exponent must be >= 2 at m = inf");
  if (!m.infinite() && m.value() == 1) return 1;
  const auto& t = zeta_table(s, m);
  const double w = rs.uniform() * t.total;
  const std::size_t n = t.prefix.size() - 1;
  if (w < t.prefix[n]) {
    const auto it = std::upper_bound(t.prefix.begin() + 1, t.prefix.end(), w);
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(it - t.prefix.begin()), n));
  }
  // smallest mu > n with sum_{nu > mu} nu^-s < total - w
  const double v = t.total - w;
  double lo = static_cast<double>(n), hi = 2.0 * static_cast<double>(n);
  while (hi < INT_MAX && zeta_tail(hi, s) >= v) hi *= 2;
  if (hi >= INT_MAX) return INT_MAX;
  while (hi - lo > 1) {
    const double mid = std::floor((lo + hi) / 2);
    (zeta_tail(mid, s) < v ? hi : lo) = mid;
  }
  return static_cast<int>(hi);
}

std::vector<double> sample_dirichlet(const std::vector<int>& alpha, RandomStream& rs) {
  std::vector<double> x(alpha.size());
  double total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    x[i] = rs.gamma_int(alpha[i]);
    total += x[i];
  }
  for (auto& v : x) v /= total;
  return x;
}

MulticurveSampler MulticurveSampler::full(int genus, const MultBound& m, int threads) {
  const auto measure = build_measure(genus, m, threads);
  MulticurveSampler s(genus, m);
  std::vector<double> w;
  for (const auto& e : measure.entries) {
    s.graphs_.push_back(e.graph);
    s.names_.push_back(e.canonical);
    w.push_back(e.probability.to_double());
  }
  s.cdf_ = normalized_cdf(w);
  s.mono_.resize(s.graphs_.size());
  return s;
}

MulticurveSampler MulticurveSampler::truncated(int genus, const MultBound& m, double kappa) {
  MulticurveSampler s(genus, m);
  std::vector<PiScaled> w;
  PiScaled total;
  for (int k = 1; k <= truncation_k_max(genus, kappa); ++k) {
    s.graphs_.push_back(single_vertex_graph(genus, k));
    s.names_.push_back(canonical_form(s.graphs_.back()));
    const Rational aut = Rational(BigInt(1) << static_cast<unsigned>(k)) * Rational(factorial(k));
    w.push_back(single_vertex_z(genus, k, m) / PiScaled(aut));
    total += w.back();
  }
  std::vector<double> p;
  for (const auto& x : w) p.push_back((x / total).rational().to_double());
  s.cdf_ = normalized_cdf(p);
  s.mono_.resize(s.graphs_.size());
  return s;
}

double MulticurveSampler::probability(std::size_t i) const { return cdf_[i] - (i == 0 ? 0.0 : cdf_[i - 1]); }

const MulticurveSampler::Monomials& MulticurveSampler::monomials(std::size_t i) const {
  std::lock_guard<std::mutex> lock(*mu_);
  auto& slot = mono_[i];
  if (!slot) {
    slot = std::make_unique<Monomials>();
    const auto f = graph_polynomial(graphs_[i]).polynomial;
    std::vector<double> w;
    for (const auto& [exps, c] : f.terms()) {
      PiScaled t(c);
      for (int n : exps) t *= PiScaled(Rational(factorial(n))) * zeta_partial_scaled(bound_, n + 1);
      slot->exps.push_back(exps);
      w.push_back(t.to_double());
    }
    slot->cdf = normalized_cdf(w);
  }
  return *slot;
}

TopologicalTypeSample MulticurveSampler::sample_type(RandomStream& rs) const {
  const std::size_t i = pick(cdf_, rs.uniform());
  const auto& mono = monomials(i);
  TopologicalTypeSample t;
  t.graph = &graphs_[i];
  t.canonical = names_[i];
  t.monomial = mono.exps[pick(mono.cdf, rs.uniform())];
  for (int n : t.monomial) t.multiplicities.push_back(sample_truncated_zeta(n + 1, bound_, rs));
  return t;
}

LengthVector MulticurveSampler::sample_lengths(const TopologicalTypeSample& t, RandomStream& rs) const {
  std::vector<int> alpha;
  for (int n : t.monomial) alpha.push_back(n + 1);
  return {sample_dirichlet(alpha, rs), Ordering::unordered};
}

LengthVector MulticurveSampler::sample(RandomStream& rs) const { return sample_lengths(sample_type(rs), rs); }

LengthVector size_biased_reorder(const LengthVector& v, RandomStream& rs) {
  for (double x : v.values) {
    if (!(x >= 0)) throw std::invalid_argument("size_biased_reorder: negative entry");
  }
  std::vector<double> rest = v.values;
  LengthVector out{{}, Ordering::size_biased};
  out.values.reserve(rest.size());
  while (!rest.empty()) {
    double total = 0;
    for (double x : rest) total += x;
    std::size_t i;
    if (total > 0) {
      const double u = rs.uniform() * total;
      double acc = 0;
      i = rest.size();
      std::size_t last_positive = 0;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] <= 0) continue;
        last_positive = j;
        acc += rest[j];
        if (u < acc) {
          i = j;
          break;
        }
      }
      if (i == rest.size()) i = last_positive;
    } else {
      i = static_cast<std::size_t>(rs.below(rest.size()));
    }
    out.values.push_back(rest[i]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

int gem_default_length(double theta) {
  if (!(theta > 0)) throw std::invalid_argument("GEM: theta must be positive");
  return std::max(1, static_cast<int>(std::ceil(std::log(1e-12) / std::log(theta / (1 + theta)))));
}

LengthVector gem_sample(double theta, int k, RandomStream& rs) {
  if (!(theta > 0)) throw std::invalid_argument("GEM: theta must be positive");
  if (k < 1) throw std::invalid_argument("GEM: need at least one coordinate");
  LengthVector out{{}, Ordering::size_biased};
  double rest = 1;
  for (int i = 0; i < k; ++i) {
    const double keep = std::pow(1 - rs.uniform(), 1 / theta);  // 1 - U, U ~ Beta(1, theta)
    out.values.push_back(rest * (1 - keep));
    rest *= keep;
  }
  return out;
}

LengthVector pd_sample(double theta, int k, RandomStream& rs) { return sorted_desc(gem_sample(theta, k, rs)); }

LengthVector sample_ewens_cycles(int n, double theta, RandomStream& rs) {
  if (n < 1) throw std::invalid_argument("Ewens: n must be positive");
  if (!(theta > 0)) throw std::invalid_argument("Ewens: theta must be positive");
  LengthVector out{{}, Ordering::sorted_desc};
  int start = 1;
  for (int i = 2; i <= n; ++i) {
    if (rs.uniform() * (theta + i - 1) < theta) {
      out.values.push_back(static_cast<double>(i - start));
      start = i;
    }
  }
  out.values.push_back(static_cast<double>(n + 1 - start));
  for (auto& v : out.values) v /= n;
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

}  // namespace mcl
