#include "criteria.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mcl/asymptotics/s_sums.hpp"
#include "mcl/cli/commands.hpp"
#include "mcl/core/combinatorics.hpp"
#include "mcl/intersection/correlators.hpp"
#include "mcl/intersection/volume.hpp"
#include "mcl/measure/multicurve_measure.hpp"
#include "mcl/moments/moments.hpp"
#include "mcl/sampling/large_genus.hpp"

namespace mcl::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& s) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SparsePolynomial poly(int vars, const std::vector<std::pair<Exponents, Rational>>& terms) {
  SparsePolynomial p(SparsePolynomial::numbered_variables(vars));
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// int_0^1 x^a (1-x)^b dx by binomial expansion
Rational beta_int(int a, int b) {
  Rational s;
  for (int i = 0; i <= b; ++i) {
    Rational t(binomial(b, i), BigInt(a + i + 1));
    s += (i % 2 == 0) ? t : -t;
  }
  return s;
}

// prod x^d over {sum x = 1}, integrating out one coordinate at a time
Rational slice_integral(const Exponents& d) {
  Rational c = 1;
  int acc = d.back();
  for (std::size_t i = d.size() - 1; i-- > 0;) {
    c *= beta_int(d[i], acc);
    acc += d[i] + 1;
  }
  return c;
}

std::int64_t brute_aut(const StableGraph& g) {
  const int n = g.vertex_count();
  const int h = 2 * g.edge_count();
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && g.genera()[phi[v]] == g.genera()[v];
    if (!ok) continue;
    std::vector<int> psi(h);
    std::iota(psi.begin(), psi.end(), 0);
    do {
      bool good = true;
      for (int x = 0; x < h && good; ++x) {
        good = psi[x ^ 1] == (psi[x] ^ 1) && g.half_edge_vertex(psi[x]) == phi[g.half_edge_vertex(x)];
      }
      if (good) ++count;
    } while (std::next_permutation(psi.begin(), psi.end()));
  } while (std::next_permutation(phi.begin(), phi.end()));
  return count;
}

// ---------------------------------------------------------------------------

Outcome kontsevich(const Options&) {
  Outcome o;
  const auto t0 = Clock::now();
  o.require(volume_polynomial(0, 3) == poly(3, {{{0, 0, 0}, 1}}), "V_{0,3}");
  o.require(volume_polynomial(0, 4) == poly(4, {{{2, 0, 0, 0}, Rational(1, 2)},
                                                {{0, 2, 0, 0}, Rational(1, 2)},
                                                {{0, 0, 2, 0}, Rational(1, 2)},
                                                {{0, 0, 0, 2}, Rational(1, 2)}}),
            "V_{0,4}");
  o.require(volume_polynomial(1, 1) == poly(1, {{{2}, Rational(1, 48)}}), "V_{1,1}");
  o.require(volume_polynomial(1, 2) == poly(2, {{{4, 0}, Rational(1, 192)},
                                                {{2, 2}, Rational(2, 192)},
                                                {{0, 4}, Rational(1, 192)}}),
            "V_{1,2}");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime " + fmt("%.3f", dt) + " s");
  o.note("4 polynomials equal, " + fmt("%.4f", dt) + " s");
  return o;
}

Outcome genus_two_census(const Options&) {
  Outcome o;
  const auto graphs = enumerate_stable_graphs(2);
  o.require(graphs.size() == 6, "census size " + std::to_string(graphs.size()));
  // Figure 1 column three, keyed by the graph shape; a is the first edge
  const std::map<std::string, std::vector<std::pair<Exponents, Rational>>> expect{
      {"1;0-0", {{{5}, Rational(1, 48)}}},
      {"1,1;0-1", {{{5}, Rational(1, 2304)}}},
      {"0;0-0,0-0", {{{3, 1}, 1}, {{1, 3}, 1}}},
      {"0,1;0-0,0-1", {{{1, 3}, Rational(1, 48)}}},
      {"0,0;0-0,0-1,1-1", {{{1, 1, 1}, 1}}},
      {"0,0;0-1,0-1,0-1", {{{1, 1, 1}, 1}}},
  };
  std::multiset<std::int64_t> auts, brute;
  int matched = 0;
  for (const auto& g : graphs) {
    const std::string c = canonical_form(g);
    const auto it = expect.find(c);
    if (it == expect.end()) {
      o.require(false, "unexpected graph " + c);
      continue;
    }
    auto terms = it->second;
    if (c == "0,1;0-0,0-1" && g.edges()[0].first != g.edges()[0].second) terms = {{{3, 1}, Rational(1, 48)}};
    const auto f = graph_polynomial(g).polynomial;
    o.require(f == poly(g.edge_count(), terms), "F for " + c + " is " + f.str());
    matched += f == poly(g.edge_count(), terms);
    auts.insert(automorphism_count(g));
    brute.insert(brute_aut(g));
  }
  o.require(auts == brute, "automorphisms differ from brute force");
  o.require(auts == std::multiset<std::int64_t>{2, 2, 8, 2, 8, 12}, "automorphism multiset");
  o.note(std::to_string(matched) + "/6 polynomials match, Aut {2,2,2,8,8,12}");
  return o;
}

Outcome normalization(const Options&) {
  Outcome o;
  long long checks = 0;
  std::map<Exponents, Rational> integrals;
  for (int g = 2; g <= 4; ++g) {
    const Rational f67(factorial(6 * g - 7));
    for (const auto& sg : enumerate_stable_graphs(g)) {
      const auto f = graph_polynomial(sg).polynomial;
      const std::size_t k = f.variable_count();
      // slice integral of F at unit multiplicities, per monomial
      std::vector<std::pair<const Exponents*, Rational>> parts;
      for (const auto& [exps, c] : f.terms()) {
        auto it = integrals.find(exps);
        if (it == integrals.end()) it = integrals.emplace(exps, slice_integral(exps)).first;
        parts.emplace_back(&exps, c * it->second);
      }
      std::vector<int> m(k, 1);
      while (true) {
        // the density F(x) on {sum m_e x_e = 1}, pulled back to the unit simplex
        Rational integral;
        for (const auto& [exps, base] : parts) {
          Rational t = base;
          BigInt den = 1;
          for (std::size_t i = 0; i < k; ++i) {
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), BigInt(m[i]).get_mpz_t(), static_cast<unsigned long>((*exps)[i] + 1));
            den *= pw;
          }
          integral += t / Rational(den);
        }
        const bool ok = apply_Y(f, m) == f67 * integral;
        ++checks;
        if (!ok) o.require(false, "g=" + std::to_string(g) + " " + canonical_form(sg));
        std::size_t i = 0;
        while (i < k && m[i] == 3) m[i++] = 1;
        if (i == k) break;
        ++m[i];
      }
    }
  }
  o.note(std::to_string(checks) + " (graph, m) pairs with entries <= 3, g <= 4");
  return o;
}

Outcome single_vertex_aut(const Options&) {
  Outcome o;
  int n = 0;
  for (int g = 2; g <= 8; ++g) {
    for (int k = 1; k <= std::min(g, 6); ++k) {
      std::int64_t expect = 1;
      for (int i = 1; i <= k; ++i) expect *= 2 * i;
      o.require(automorphism_count(single_vertex_graph(g, k)) == expect,
                "g=" + std::to_string(g) + " k=" + std::to_string(k));
      ++n;
    }
  }
  o.note(std::to_string(n) + " graphs");
  return o;
}

Outcome moment_cross_validation(const Options& opt) {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<MomentIndex> ps{MomentIndex({1}), MomentIndex({2}), MomentIndex({1, 1})};
  int exact_checks = 0;
  for (int g = 2; g <= 6; ++g) {
    for (const auto& m : {MultBound::finite(1), MultBound::finite(2)}) {
      for (double kappa : {1.5, 3.0}) {
        for (const auto& p : ps) {
          PiScaled num, den;
          for (int k = 1; k <= truncation_k_max(g, kappa); ++k) {
            const PiScaled w =
                single_vertex_z(g, k, m) / PiScaled(Rational(BigInt(1) << k) * Rational(factorial(k)));
            den += w;
            if (p.r() <= k) num += w * PiScaled(mp_gamma_gk_formula(g, m, k, p));
          }
          o.require(mp_exact_multicurve(g, m, p, kappa) == (num / den).rational(),
                    "mixture g=" + std::to_string(g) + " m=" + m.str() + " p=" + p.str());
          ++exact_checks;
        }
      }
    }
  }
  double worst = 0;
  const std::uint64_t n = 1000000;
  std::uint64_t tag = 500;
  for (int g = 2; g <= 3; ++g) {
    for (const auto& m : {MultBound::finite(1), MultBound::infinity()}) {
      const auto sampler = MulticurveSampler::full(g, m, opt.threads);
      using Acc = std::array<MomentAccumulator, 3>;
      const auto parts = run_blocks<Acc>(n, opt.seed, tag++, opt.threads,
                                         [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                           Acc acc;
                                           for (auto i = b; i < e; ++i) {
                                             const auto v = size_biased_reorder(sampler.sample(rs), rs);
                                             for (std::size_t j = 0; j < 3; ++j) acc[j].add(moment_function(v.values, ps[j]));
                                           }
                                           return acc;
                                         });
      for (std::size_t j = 0; j < 3; ++j) {
        MomentAccumulator total;
        for (const auto& a : parts) total.merge(a[j]);
        const auto est = total.estimate();
        const double exact = mp_exact_multicurve(g, m, ps[j]).to_double();
        const double z = std::abs(est.value - exact) / est.standard_error;
        worst = std::max(worst, z);
        o.require(z < 4, "MC g=" + std::to_string(g) + " m=" + m.str() + " p=" + ps[j].str() + " off by " +
                             fmt("%.2f", z) + " se");
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 300, "runtime " + fmt("%.1f", dt) + " s");
  o.note(std::to_string(exact_checks) + " exact mixtures equal; MC worst " + fmt("%.2f", worst) + " se at 1e6; " +
         fmt("%.1f", dt) + " s");
  return o;
}

Outcome gem_closed_form(const Options& opt) {
  Outcome o;
  o.require(mp_gem_closed_half(MomentIndex({0})) == 1, "M_(0) != 1");
  o.require(mp_gem_closed(0.5, MomentIndex({0})) == 1.0, "float M_(0) != 1");
  std::vector<MomentIndex> grid;
  for (int r = 1; r <= 3; ++r) {
    int total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<int> p(r);
      int x = code;
      for (int i = 0; i < r; ++i) {
        p[i] = x % 3;
        x /= 3;
      }
      grid.emplace_back(p);
    }
  }
  const std::uint64_t n = 1000000;
  const int len = gem_default_length(0.5);
  const auto parts = run_blocks<std::vector<MomentAccumulator>>(
      n, opt.seed, 600, opt.threads, [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
        std::vector<MomentAccumulator> acc(grid.size());
        for (auto i = b; i < e; ++i) {
          const auto v = gem_sample(0.5, len, rs);
          for (std::size_t j = 0; j < grid.size(); ++j) acc[j].add(moment_function(v.values, grid[j]));
        }
        return acc;
      });
  double worst = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    MomentAccumulator total;
    for (const auto& a : parts) total.merge(a[j]);
    const auto est = total.estimate();
    const double exact = mp_gem_closed(0.5, grid[j]);
    const double z = est.standard_error > 0 ? std::abs(est.value - exact) / est.standard_error : 0.0;
    if (est.standard_error == 0) o.require(est.value == exact, "p=" + grid[j].str() + " constant mismatch");
    worst = std::max(worst, z);
    o.require(z < 4, "p=" + grid[j].str() + " off by " + fmt("%.2f", z) + " se");
  }
  o.note(std::to_string(grid.size()) + " indices, worst " + fmt("%.2f", worst) + " se at 1e6");
  return o;
}

Outcome pd_marginals(const Options& opt) {
  Outcome o;
  const std::array<double, 3> ref{0.758, 0.171, 0.049};
  std::array<double, 3> q{};
  for (int j = 1; j <= 3; ++j) {
    q[j - 1] = pd_marginal_moment(0.5, j, 1);
    o.require(std::abs(q[j - 1] - ref[j - 1]) <= 0.001, "E V_" + std::to_string(j) + " = " + fmt("%.6f", q[j - 1]));
  }
  const std::uint64_t n = 1000000;
  const int len = gem_default_length(0.5);
  using Acc = std::array<MomentAccumulator, 3>;
  const auto parts = run_blocks<Acc>(n, opt.seed, 700, opt.threads,
                                     [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                       Acc acc;
                                       for (auto i = b; i < e; ++i) {
                                         const auto v = pd_sample(0.5, len, rs);
                                         for (std::size_t j = 0; j < 3; ++j) acc[j].add(v.values[j]);
                                       }
                                       return acc;
                                     });
  double worst = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    MomentAccumulator total;
    for (const auto& a : parts) total.merge(a[j]);
    const auto est = total.estimate();
    const double z = std::abs(est.value - q[j]) / est.standard_error;
    worst = std::max(worst, z);
    o.require(z < 4, "MC V_" + std::to_string(j + 1) + " off by " + fmt("%.2f", z) + " se");
  }
  o.note("quadrature " + fmt("%.6f", q[0]) + " / " + fmt("%.6f", q[1]) + " / " + fmt("%.6f", q[2]) +
         "; MC worst " + fmt("%.2f", worst) + " se");
  return o;
}

Outcome series_identity(const Options&) {
  Outcome o;
  int checks = 0;
  for (int m = 1; m <= 3; ++m) {
    const auto th = WeightSequence::zeta(MultBound::finite(m));
    for (const auto& ps : {"0", "1", "2", "1,1"}) {
      const MomentIndex p = MomentIndex::parse(ps);
      for (int n = 1; n <= 30; ++n) {
        o.require(s_direct_exact(th, p, n) == s_via_series(th, p, n),
                  "m=" + std::to_string(m) + " p=" + p.str() + " n=" + std::to_string(n));
        ++checks;
      }
    }
  }
  // D_p(-log(1-z)) = p! (1/(1-z)^{p+1} - 1)
  const auto lg = g_theta_series(WeightSequence::constant(1), 64);
  for (int p = 0; p <= 4; ++p) {
    const auto d = apply_Dp(lg, p);
    bool ok = d[0] == 0;
    for (int k = 1; k <= 64; ++k) ok = ok && d[k] == Rational(factorial(p) * binomial(k + p, p));
    o.require(ok, "D_" + std::to_string(p) + " log identity");
  }
  o.note(std::to_string(checks) + " exact S values equal; D_p identity for p <= 4 to order 64");
  return o;
}

Outcome transfer_truncation(const Options&) {
  Outcome o;
  std::string trace;
  for (const auto& m : {MultBound::finite(1), MultBound::infinity()}) {
    const auto th = WeightSequence::zeta(m);
    for (const auto& ps : {"0", "1", "1,1"}) {
      const MomentIndex p = MomentIndex::parse(ps);
      double prev = 1e9, err = 0;
      for (int n : {250, 500, 1000, 2000, 4000}) {
        err = std::abs(s_direct(th, p, n) / s_asymptote(*th.beta, p, n) - 1);
        o.require(err < prev, "m=" + m.str() + " p=" + p.str() + " not decreasing at n=" + std::to_string(n));
        prev = err;
      }
      o.require(err < 0.1, "m=" + m.str() + " p=" + p.str() + " error " + fmt("%.3g", err) + " at n=4000");
      if (p.r() == 1 && p.p[0] == 0) trace += " m=" + m.str() + ": " + fmt("%.2g", err);
    }
  }
  double worst = 0;
  for (const auto& m : {MultBound::finite(1), MultBound::infinity()}) {
    const auto th = WeightSequence::zeta(m);
    for (const auto& ps : {"0", "1", "1,1"}) {
      const MomentIndex p = MomentIndex::parse(ps);
      const double r = std::abs(s_truncated(th, p, 2000, 1.5) / s_direct(th, p, 2000) - 1);
      worst = std::max(worst, r);
    }
  }
  o.require(worst < 1e-3, "truncation at n=2000, kappa=1.5 (k <= " + std::to_string(s_truncation_k_max(2000, 1.5)) +
                              ") misses by up to " + fmt("%.3f", worst));
  o.note("asymptote error at n=4000:" + trace + "; truncation " + fmt("%.2g", worst));
  return o;
}

Outcome volume_asymptotics(const Options& opt) {
  Outcome o;
  std::string trace;
  for (const auto& m : {MultBound::finite(1), MultBound::infinity()}) {
    const double r2 = total_mass_b(2, m, opt.threads).to_double() / mass_asymptote(2, m);
    const double r6 = total_mass_b(6, m, opt.threads).to_double() / mass_asymptote(6, m);
    o.require(std::abs(r6 - 1) < std::abs(r2 - 1), "m=" + m.str() + ": ratio " + fmt("%.5f", r2) + " at g=2, " +
                                                       fmt("%.5f", r6) + " at g=6");
    trace += (trace.empty() ? "" : ", ") + std::string("m=") + m.str() + ": " + fmt("%.4f", r2) + " -> " +
             fmt("%.4f", r6);
  }
  o.note("b/asymptote " + trace);
  return o;
}

Outcome main_theorem(const Options& opt) {
  Outcome o;
  const auto t0 = Clock::now();
  cli::RunConfig c;
  c.command = "converge";
  c.genus = {2, 8, 64, 512};
  c.m = MultBound::infinity();
  c.kappa = 3.0;
  c.samples = 100000;
  c.seed = opt.seed;
  c.threads = opt.threads;
  const auto r = cli::run(c);
  if (r.exit_code != 0) {
    o.require(false, "converge exited " + std::to_string(r.exit_code) + ": " + r.error);
    return o;
  }
  // rows after the column line of the first table: genus,sampler,kappa,...,distance
  std::istringstream in(r.output);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::vector<double> dist;
  std::string trace;
  while (std::getline(in, line) && !line.empty()) {
    const auto last = line.rfind(',');
    dist.push_back(std::stod(line.substr(last + 1)));
    trace += (trace.empty() ? "" : " ") + fmt("%.4f", dist.back());
  }
  o.require(dist.size() == 4, "expected 4 rows");
  for (std::size_t i = 1; i < dist.size(); ++i) o.require(dist[i] < dist[i - 1], "distance not decreasing");
  o.require(!dist.empty() && dist.back() < 0.02, "final distance " + fmt("%.4f", dist.empty() ? 1.0 : dist.back()));
  const double dt = seconds_since(t0);
  o.require(dt < 600, "runtime " + fmt("%.1f", dt) + " s");
  o.note("kappa=3, distances " + trace + ", " + fmt("%.1f", dt) + " s");
  return o;
}

Outcome size_biased_law(const Options& opt) {
  Outcome o;
  const LengthVector x{{0.5, 0.3, 0.2}, Ordering::unordered};
  const std::uint64_t n = 1000000;
  const auto parts = run_blocks<std::array<std::uint64_t, 6>>(
      n, opt.seed, 800, opt.threads, [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
        std::array<std::uint64_t, 6> cnt{};
        for (auto i = b; i < e; ++i) {
          const auto v = size_biased_reorder(x, rs);
          // identify the order by which coordinate comes first and second
          int first = 0, second = 0;
          for (int k = 0; k < 3; ++k) {
            if (v.values[0] == x.values[k]) first = k;
            if (v.values[1] == x.values[k]) second = k;
          }
          ++cnt[first * 2 + (second > first ? second - 1 : second)];
        }
        return cnt;
      });
  std::array<std::uint64_t, 6> total{};
  for (const auto& p : parts) {
    for (int i = 0; i < 6; ++i) total[i] += p[i];
  }
  double worst = 0;
  for (int first = 0; first < 3; ++first) {
    for (int s = 0; s < 2; ++s) {
      const int second = s < first ? s : s + 1;
      const double expect = x.values[first] * x.values[second] / (1 - x.values[first]);
      const double freq = static_cast<double>(total[first * 2 + s]) / n;
      const double sigma = std::sqrt(expect * (1 - expect) / n);
      worst = std::max(worst, std::abs(freq - expect) / sigma);
      o.require(std::abs(freq - expect) < 4 * sigma, "order starting " + std::to_string(first + 1));
    }
  }
  const double p213 = 0.3 * 0.5 / 0.7;
  o.note("P(2,1,3) = 3/14 = " + fmt("%.5f", p213) + " observed " + fmt("%.5f", static_cast<double>(total[2]) / n) +
         "; worst " + fmt("%.2f", worst) + " sigma");
  return o;
}

Outcome ewens(const Options& opt) {
  Outcome o;
  const std::uint64_t n = 100000;
  const auto parts = run_blocks<MomentAccumulator>(n, opt.seed, 900, opt.threads,
                                                   [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                                     MomentAccumulator acc;
                                                     for (auto i = b; i < e; ++i) {
                                                       acc.add(sample_ewens_cycles(10000, 0.5, rs).values[0]);
                                                     }
                                                     return acc;
                                                   });
  MomentAccumulator total;
  for (const auto& a : parts) total.merge(a);
  const auto est = total.estimate();
  const double q = pd_marginal_moment(0.5, 1, 1);
  o.require(std::abs(est.value - q) < 0.02, "mean " + fmt("%.4f", est.value) + " vs " + fmt("%.4f", q));
  o.note("Ewens(1/2) n=1e4 mean " + fmt("%.4f", est.value) + " vs PD " + fmt("%.4f", q));
  return o;
}

Outcome determinism(const Options& opt) {
  Outcome o;
  std::vector<cli::RunConfig> configs;
  auto add = [&](const std::string& cmd, auto&& tweak) {
    cli::RunConfig c;
    c.command = cmd;
    c.seed = opt.seed;
    tweak(c);
    configs.push_back(c);
  };
  add("graphs", [](cli::RunConfig& c) { c.genus = {4}; });
  add("weights", [](cli::RunConfig& c) { c.genus = {3}; c.m = MultBound::finite(2); });
  add("sample", [](cli::RunConfig& c) { c.genus = {3}; c.samples = 20000; c.ordering = "size-biased"; });
  add("sample", [](cli::RunConfig& c) { c.genus = {40}; c.samples = 20000; c.approx_correlators = true; });
  add("moments", [](cli::RunConfig& c) {
    c.genus = {3};
    c.p = {"1", "1,1"};
    c.samples = 30000;
    c.methods = {"exact", "mc", "gem", "pd"};
    c.format = "json";
  });
  add("converge", [](cli::RunConfig& c) { c.genus = {2, 10}; c.samples = 20000; });
  add("asym", [](cli::RunConfig& c) { c.n_list = {50, 100}; c.p = {"0", "1,1"}; });
  int runs = 0;
  for (const auto& base : configs) {
    std::string first;
    for (int threads : {1, 3, 1, 4}) {
      auto c = base;
      c.threads = threads;
      const auto r = cli::run(c);
      ++runs;
      if (r.exit_code != 0) {
        o.require(false, c.command + " exited " + std::to_string(r.exit_code) + ": " + r.error);
        break;
      }
      if (first.empty()) {
        first = r.output;
      } else {
        o.require(r.output == first, c.command + " output differs at threads=" + std::to_string(threads));
      }
    }
  }
  o.note(std::to_string(configs.size()) + " configurations x threads {1,3,1,4}: " + std::to_string(runs) +
         " runs byte-identical");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*fn)(const Options&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "Kontsevich tables", kontsevich},
      {2, "genus-2 census", genus_two_census},
      {3, "normalization", normalization},
      {4, "|Aut(Gamma_{g,k})| = 2^k k!", single_vertex_aut},
      {5, "moment cross-validation", moment_cross_validation},
      {6, "GEM closed form", gem_closed_form},
      {7, "PD(1/2) marginals", pd_marginals},
      {8, "series identity", series_identity},
      {9, "transfer and truncation", transfer_truncation},
      {10, "volume asymptotics trend", volume_asymptotics},
      {11, "convergence to PD(1/2)", main_theorem},
      {12, "size-biased law", size_biased_law},
      {13, "Ewens comparison", ewens},
      {14, "determinism", determinism},
  };
  return list;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    const auto t0 = Clock::now();
    try {
      const Outcome o = c.fn(options);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d  %-30s (%.1f s)  ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace mcl::acceptance
