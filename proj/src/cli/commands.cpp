#include "mcl/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>

#include "criteria.hpp"
#include "json.hpp"
#include "mcl/asymptotics/s_sums.hpp"
#include "mcl/intersection/cache.hpp"
#include "mcl/intersection/volume.hpp"
#include "mcl/measure/multicurve_measure.hpp"
#include "mcl/moments/moments.hpp"
#include "mcl/sampling/large_genus.hpp"

#ifndef MCL_VERSION
#define MCL_VERSION "dev"
#endif

namespace mcl::cli {
namespace {

constexpr std::array<double, 3> kPdTop3{0.758, 0.171, 0.049};

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join_reals(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + format_real(v[i]);
  return out;
}

void require_exact_genus(int g, const char* what) {
  if (g < 2) throw UsageError(std::string(what) + ": genus must be at least 2");
  if (g > kExactGenusBudget) {
    throw BudgetError(std::string(what) + ": genus " + std::to_string(g) + " is past the exact budget " +
                      std::to_string(kExactGenusBudget));
  }
}

// A length-vector source for one genus: the exact sampler up to the budget,
// else the Gamma_{g,k} one.
struct Source {
  std::string name;
  std::optional<MulticurveSampler> exact;
  std::optional<LargeGenusSampler> large;

  LengthVector draw(RandomStream& rs, std::string* label) const {
    if (exact) {
      const auto t = exact->sample_type(rs);
      if (label) *label = t.canonical + "|" + join(t.multiplicities, " ");
      return exact->sample_lengths(t, rs);
    }
    auto d = large->draw(rs);
    if (label) *label = "Gamma_{" + std::to_string(large->genus()) + "," + std::to_string(d.k) + "}|" + join(d.parts, " ");
    return std::move(d.lengths);
  }
};

// converge keeps the exact sampler to genus 5 and switches to the
// approximate large-genus one from genus 8 on.
Source make_source(const RunConfig& c, int g, bool converge) {
  if (g < 2) throw UsageError("genus must be at least 2");
  Source s;
  const int exact_cap = converge ? 5 : kExactGenusBudget;
  if (g <= exact_cap) {
    if (c.kappa && !converge) {
      s.exact.emplace(MulticurveSampler::truncated(g, c.m, *c.kappa));
      s.name = "truncated";
    } else {
      s.exact.emplace(MulticurveSampler::full(g, c.m, c.threads));
      s.name = "full";
    }
    return s;
  }
  const bool approx = c.approx_correlators || (converge && g >= 8);
  if (!approx && g > kLargeGenusExactBudget) {
    throw BudgetError("exact c~ coefficients past genus " + std::to_string(kLargeGenusExactBudget) +
                      "; pass --approx-correlators");
  }
  s.large.emplace(g, c.m, c.kappa_or_default(), approx);
  s.name = approx ? "large-genus-approx" : "large-genus";
  return s;
}

LengthVector apply_ordering(const LengthVector& v, const std::string& ordering, RandomStream& rs) {
  if (ordering == "sorted") return sorted_desc(v);
  if (ordering == "size-biased") return size_biased_reorder(v, rs);
  return v;
}

std::vector<Table> cmd_graphs(const RunConfig& c) {
  const int g = c.single_genus();
  require_exact_genus(g, "graphs");
  Table t{"graphs", {"index", "canonical", "vertex_genera", "edges", "aut"}, {}};
  int i = 0;
  for (const auto& sg : enumerate_stable_graphs(g)) {
    std::string edges;
    for (const auto& [u, v] : sg.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    t.add({Cell::integer(i++), Cell::str(canonical_form(sg)), Cell::str(join(sg.genera(), " ")), Cell::str(edges),
           Cell::integer(automorphism_count(sg))});
  }
  return {t};
}

std::vector<Table> cmd_correlator(const RunConfig& c) {
  const int g = c.single_genus();
  if (c.indices.empty()) throw UsageError("correlator: --indices required");
  Rational v;
  try {
    v = correlator(g, c.indices);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Table t{"correlator", {"genus", "indices", "value", "aggarwal_epsilon"}, {}};
  Cell eps = Cell::str("");
  if (g >= 1 && !v.is_zero()) eps = Cell::rational(epsilon_aggarwal(g, c.indices));
  t.add({Cell::integer(g), Cell::str(join(c.indices, ",")), Cell::rational(v), eps});
  return {t};
}

std::vector<Table> cmd_volume(const RunConfig& c) {
  const int g = c.genus.empty() ? 0 : c.single_genus();
  if (c.n < 1) throw UsageError("volume-poly: --n must be at least 1");
  if (2 * g - 2 + c.n <= 0) throw UsageError("volume-poly: unstable (g, n)");
  const auto& poly = volume_polynomial(g, c.n);
  Table t{"volume_polynomial", {"exponents", "coefficient"}, {}};
  for (const auto& [exps, coeff] : poly.terms()) {
    t.add({Cell::str(join(std::vector<int>(exps.begin(), exps.end()), " ")), Cell::rational(coeff)});
  }
  Table s{"polynomial", {"genus", "n", "text"}, {}};
  s.add({Cell::integer(g), Cell::integer(c.n), Cell::str(poly.str())});
  return {s, t};
}

std::vector<Table> cmd_weights(const RunConfig& c) {
  const int g = c.single_genus();
  require_exact_genus(g, "weights");
  const auto measure = build_measure(g, c.m, c.threads);
  Table t{"weights", {"canonical_graph", "aut", "Zm", "weight", "probability"}, {}};
  for (const auto& e : measure.entries) {
    t.add({Cell::str(e.canonical), Cell::integer(e.aut), Cell::exact(e.z), Cell::exact(e.weight),
           Cell::rational(e.probability)});
  }
  const PiScaled b = measure.b();
  const double kappa = c.kappa_or_default();
  const PiScaled bt = truncated_mass_b(g, c.m, kappa);
  const double asym = mass_asymptote(g, c.m);
  Table s{"summary", {"quantity", "exact", "value"}, {}};
  s.add({Cell::str("b"), Cell::str(b.str()), Cell::number(b.to_double())});
  s.add({Cell::str("b_tilde"), Cell::str(bt.str()), Cell::number(bt.to_double())});
  s.add({Cell::str("kappa"), Cell::str(""), Cell::number(kappa)});
  s.add({Cell::str("b_tilde_over_b"), Cell::exact(bt / b), Cell::number((bt / b).to_double())});
  s.add({Cell::str("asymptote"), Cell::str(""), Cell::number(asym)});
  s.add({Cell::str("b_over_asymptote"), Cell::str(""), Cell::number(b.to_double() / asym)});
  return {t, s};
}

std::vector<Table> cmd_sample(const RunConfig& c) {
  const int g = c.single_genus();
  const Source src = make_source(c, g, false);
  struct Row {
    std::string label;
    LengthVector v;
  };
  const auto blocks = run_blocks<std::vector<Row>>(c.samples, c.seed, 1, c.threads,
                                                   [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                                     std::vector<Row> out;
                                                     for (auto i = b; i < e; ++i) {
                                                       Row r;
                                                       r.v = apply_ordering(src.draw(rs, &r.label), c.ordering, rs);
                                                       out.push_back(std::move(r));
                                                     }
                                                     return out;
                                                   });
  Table t{"samples", {"draw", "graph", "multiplicities", "ordering", "lengths"}, {}};
  long long i = 0;
  for (const auto& blk : blocks) {
    for (const auto& r : blk) {
      const auto bar = r.label.find('|');
      t.add({Cell::integer(i++), Cell::str(r.label.substr(0, bar)), Cell::str(r.label.substr(bar + 1)),
             Cell::str(ordering_name(r.v.ordering)), Cell::str(join_reals(r.v.values))});
    }
  }
  Table s{"sampler", {"genus", "m", "kind", "kappa"}, {}};
  s.add({Cell::integer(g), Cell::str(c.m.str()), Cell::str(src.name),
         src.exact && src.name == "full" ? Cell::str("") : Cell::number(c.kappa_or_default())});
  return {s, t};
}

MomentAccumulator mc_moment(const Source& src, const MomentIndex& p, const RunConfig& c, std::uint64_t tag) {
  const auto parts = run_blocks<MomentAccumulator>(c.samples, c.seed, tag, c.threads,
                                                   [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                                     MomentAccumulator acc;
                                                     for (auto i = b; i < e; ++i) {
                                                       const auto v = size_biased_reorder(src.draw(rs, nullptr), rs);
                                                       acc.add(moment_function(v.values, p));
                                                     }
                                                     return acc;
                                                   });
  MomentAccumulator total;
  for (const auto& a : parts) total.merge(a);
  return total;
}

std::vector<Table> cmd_moments(const RunConfig& c) {
  Table t{"moments", {"method", "p", "value", "exact", "std_error", "samples"}, {}};
  const bool needs_genus = std::any_of(c.methods.begin(), c.methods.end(), [](const std::string& m) {
    return m == "exact" || m == "mc" || m == "asymptotic";
  });
  const int g = needs_genus ? c.single_genus() : 0;
  std::optional<Source> src;
  for (std::size_t pi = 0; pi < c.p.size(); ++pi) {
    const MomentIndex p = MomentIndex::parse(c.p[pi]);
    for (const auto& method : c.methods) {
      if (method == "exact") {
        if (!c.kappa) require_exact_genus(g, "moments --method exact");
        if (c.kappa && g > kLargeGenusExactBudget) {
          throw BudgetError("moments --method exact: genus past " + std::to_string(kLargeGenusExactBudget));
        }
        const Rational v = mp_exact_multicurve(g, c.m, p, c.kappa);
        t.add({Cell::str("exact"), Cell::str(p.str()), Cell::number(v.to_double()), Cell::rational(v), Cell::str(""),
               Cell::str("")});
      } else if (method == "mc") {
        if (!src) src.emplace(make_source(c, g, false));
        const auto est = mc_moment(*src, p, c, 100 + pi).estimate();
        t.add({Cell::str("mc"), Cell::str(p.str()), Cell::number(est.value), Cell::str(""),
               Cell::number(est.standard_error), Cell::integer(static_cast<long long>(est.sample_count))});
      } else if (method == "gem") {
        const double v = mp_gem_closed(c.theta, p);
        Cell exact = Cell::str("");
        if (c.theta == 0.5) exact = Cell::rational(mp_gem_closed_half(p));
        t.add({Cell::str("gem"), Cell::str(p.str()), Cell::number(v), exact, Cell::str(""), Cell::str("")});
      } else if (method == "asymptotic") {
        const double v = mp_asymptotic_multicurve(g, c.m, p, c.kappa_or_default());
        t.add({Cell::str("asymptotic"), Cell::str(p.str()), Cell::number(v), Cell::str(""), Cell::str(""),
               Cell::str("")});
      } else if (method == "pd") {
        // E V_j^{p_1} of the sorted PD(theta) vector, j = 1..3
        if (p.r() != 1 || p.p[0] < 1) continue;
        for (int j = 1; j <= 3; ++j) {
          t.add({Cell::str("pd_V" + std::to_string(j)), Cell::str(p.str()),
                 Cell::number(pd_marginal_moment(c.theta, j, p.p[0])), Cell::str(""), Cell::str(""), Cell::str("")});
        }
      }
    }
  }
  return {t};
}

std::vector<Table> cmd_converge(const RunConfig& c) {
  if (c.genus.empty()) throw UsageError("converge: --genus list required");
  Table t{"converge", {"genus", "sampler", "kappa", "top1", "top2", "top3", "se1", "se2", "se3", "distance"}, {}};
  std::uint64_t tag = 200;
  for (int g : c.genus) {
    const Source src = make_source(c, g, true);
    using Acc = std::array<MomentAccumulator, 3>;
    const auto parts = run_blocks<Acc>(c.samples, c.seed, tag++, c.threads,
                                       [&](RandomStream& rs, std::uint64_t b, std::uint64_t e) {
                                         Acc acc;
                                         for (auto i = b; i < e; ++i) {
                                           const auto v = sorted_desc(src.draw(rs, nullptr));
                                           for (std::size_t j = 0; j < 3; ++j) {
                                             acc[j].add(j < v.values.size() ? v.values[j] : 0.0);
                                           }
                                         }
                                         return acc;
                                       });
    Acc total;
    for (const auto& a : parts) {
      for (std::size_t j = 0; j < 3; ++j) total[j].merge(a[j]);
    }
    double dist = 0;
    std::array<MomentEstimate, 3> est;
    for (std::size_t j = 0; j < 3; ++j) {
      est[j] = total[j].estimate();
      dist += (est[j].value - kPdTop3[j]) * (est[j].value - kPdTop3[j]);
    }
    const bool uses_kappa = src.large || src.name == "truncated";
    t.add({Cell::integer(g), Cell::str(src.name), uses_kappa ? Cell::number(c.kappa_or_default()) : Cell::str(""),
           Cell::number(est[0].value), Cell::number(est[1].value), Cell::number(est[2].value),
           Cell::number(est[0].standard_error), Cell::number(est[1].standard_error),
           Cell::number(est[2].standard_error), Cell::number(std::sqrt(dist))});
  }
  Table target{"target", {"j", "pd_quadrature", "reference"}, {}};
  for (int j = 1; j <= 3; ++j) {
    target.add({Cell::integer(j), Cell::number(pd_marginal_moment(0.5, j, 1)), Cell::number(kPdTop3[j - 1])});
  }
  return {t, target};
}

std::vector<Table> cmd_asym(const RunConfig& c) {
  const auto theta = WeightSequence::zeta(c.m);
  const std::vector<int> ns = c.n_list.empty() ? std::vector<int>{250, 500, 1000, 2000, 4000} : c.n_list;
  const double kappa = c.kappa_or_default();
  if (c.precision_bits == 0 && !theta.is_exact()) throw UsageError("asym: exact mode needs a finite --m");
  Table t{"s_sums", {"p", "n", "s_direct", "s_direct_exact", "s_asymptote", "ratio", "k_max", "s_truncated",
                     "truncated_ratio"}, {}};
  for (const auto& ps : c.p) {
    const MomentIndex p = MomentIndex::parse(ps);
    for (int n : ns) {
      if (n < 1) throw UsageError("asym: n must be positive");
      Cell exact = Cell::str("");
      double direct = 0;
      if (c.precision_bits == 0) {
        if (n > 400) throw BudgetError("asym: exact mode is limited to n <= 400");
        const Rational v = s_direct_exact(theta, p, n);
        exact = Cell::rational(v);
        direct = v.to_double();
      } else {
        direct = s_direct(theta, p, n);
      }
      const double a = s_asymptote(*theta.beta, p, n);
      const double tr = s_truncated(theta, p, n, kappa);
      t.add({Cell::str(p.str()), Cell::integer(n), Cell::number(direct), exact, Cell::number(a),
             Cell::number(direct / a), Cell::integer(s_truncation_k_max(n, kappa)), Cell::number(tr),
             Cell::number(tr / direct)});
    }
  }
  return {t};
}

std::vector<Table> cmd_selftest(const RunConfig& c, bool& all_pass) {
  acceptance::Options opt;
  opt.seed = c.seed;
  opt.threads = c.threads;
  Table t{"acceptance", {"criterion", "status", "title", "detail"}, {}};
  all_pass = true;
  for (const auto& r : acceptance::run_all(opt, [](const acceptance::CriterionResult& r) {
         std::cerr << acceptance::format_result(r) << "\n";
       })) {
    all_pass = all_pass && r.pass;
    t.add({Cell::integer(r.id), Cell::str(r.pass ? "PASS" : "FAIL"), Cell::str(r.title), Cell::str(r.detail)});
  }
  return {t};
}

std::vector<Table> cmd_cache(const RunConfig& c) {
  if (c.cache.empty()) throw UsageError("cache: --cache path required");
  const auto st = cache_roundtrip(c.cache, CorrelatorTable::global());
  Table t{"cache", {"path", "records", "checksum", "created"}, {}};
  t.add({Cell::str(c.cache), Cell::integer(static_cast<long long>(st.records)), Cell::str(st.checksum),
         Cell::str(st.created ? "true" : "false")});
  return {t};
}

}  // namespace

std::string header_line(const RunConfig& config, const std::string& cache_checksum, bool json) {
  if (json) {
    nlohmann::ordered_json h;
    h["mcl_version"] = MCL_VERSION;
    h["config"] = nlohmann::ordered_json::parse(config.to_json());
    h["cache_checksum"] = cache_checksum;
    return h.dump();
  }
  return "# mcl " MCL_VERSION " config=" + config.to_json() + " cache=" + cache_checksum;
}

RunResult run(const RunConfig& c) {
  RunResult res;
  try {
    c.validate();
    std::string checksum = "none";
    if (!c.cache.empty() && c.command != "cache") {
      const auto st = cache_roundtrip(c.cache, CorrelatorTable::global());
      checksum = st.checksum;
    }
    std::vector<Table> tables;
    bool ok = true;
    if (c.command == "graphs") {
      tables = cmd_graphs(c);
    } else if (c.command == "correlator") {
      tables = cmd_correlator(c);
    } else if (c.command == "volume-poly") {
      tables = cmd_volume(c);
    } else if (c.command == "weights") {
      tables = cmd_weights(c);
    } else if (c.command == "sample") {
      tables = cmd_sample(c);
    } else if (c.command == "moments") {
      tables = cmd_moments(c);
    } else if (c.command == "converge") {
      tables = cmd_converge(c);
    } else if (c.command == "asym") {
      tables = cmd_asym(c);
    } else if (c.command == "selftest") {
      tables = cmd_selftest(c, ok);
    } else if (c.command == "cache") {
      tables = cmd_cache(c);
      checksum = tables.front().rows.front()[2].text;
    } else {
      throw UsageError("unknown command '" + c.command + "'");
    }
    if (!c.cache.empty() && c.command != "cache") save_cache(c.cache, CorrelatorTable::global());
    const bool json = c.format == "json";
    const std::string header = header_line(c, checksum, json);
    res.output = json ? render_json(header, tables) : render_csv(header, tables);
    res.exit_code = ok ? kOk : kFailed;
  } catch (const CacheError& e) {
    res.exit_code = kCacheCorrupt;
    res.error = std::string("cache: ") + e.what();
  } catch (const BudgetError& e) {
    res.exit_code = kBudget;
    res.error = e.what();
  } catch (const std::out_of_range& e) {
    res.exit_code = kBudget;
    res.error = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kUsage;
    res.error = e.what();
  } catch (const std::domain_error& e) {
    res.exit_code = kUsage;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kFailed;
    res.error = e.what();
  }
  return res;
}

int main(int argc, const char* const* argv) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "mcl: " << e.what() << "\n";
    return kUsage;
  }
  if (!config) return kOk;
  const RunResult r = run(*config);
  if (!r.error.empty()) std::cerr << "mcl: " << r.error << "\n";
  if (r.output.empty()) return r.exit_code;
  if (config->out.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream f(config->out, std::ios::binary);
    f << r.output;
    if (!f) {
      std::cerr << "mcl: cannot write " << config->out << "\n";
      return kFailed;
    }
  }
  return r.exit_code;
}

}  // namespace mcl::cli
