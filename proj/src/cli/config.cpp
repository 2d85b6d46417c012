#include "mcl/cli/config.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcl/moments/moments.hpp"

namespace mcl::cli {
namespace {

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"graphs", "stable graphs of a genus with automorphism counts"},
    {"correlator", "one intersection number <tau_d1 ... tau_dn>"},
    {"volume-poly", "Kontsevich polynomial V_{g,n}"},
    {"weights", "per-graph weights and probabilities of the multicurve measure"},
    {"sample", "draw normalized length vectors"},
    {"moments", "moments M_p by exact, mc, gem, pd or asymptotic methods"},
    {"converge", "top-3 sorted means against the PD(1/2) limit"},
    {"asym", "S-sums against the transfer asymptote and truncation"},
    {"selftest", "run the acceptance criteria"},
    {"cache", "load, verify and rewrite the correlator cache"}};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

int RunConfig::single_genus() const {
  if (genus.size() != 1) throw UsageError(command + ": exactly one --genus value required");
  return genus.front();
}

void RunConfig::validate() const {
  for (int g : genus) {
    if (g < 0) throw UsageError("--genus values must be non-negative");
  }
  if (kappa && !(*kappa > 1)) throw UsageError("--kappa must exceed 1");
  if (!(theta > 0)) throw UsageError("--theta must be positive");
  if (threads < 1) throw UsageError("--threads must be at least 1");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  if (precision_bits != 0 && precision_bits != 53) throw UsageError("--precision-bits must be 0 (exact) or 53");
  if (ordering != "sorted" && ordering != "size-biased" && ordering != "unordered") {
    throw UsageError("--ordering must be sorted, size-biased or unordered");
  }
  for (const auto& s : p) {
    try {
      MomentIndex::parse(s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--p: ") + e.what());
    }
  }
  for (const auto& mth : methods) {
    if (mth != "exact" && mth != "mc" && mth != "gem" && mth != "pd" && mth != "asymptotic") {
      throw UsageError("--method entries must be among exact, mc, gem, pd, asymptotic");
    }
  }
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["genus"] = genus;
  j["m"] = m.str();
  if (kappa) {
    j["kappa"] = *kappa;
  } else {
    j["kappa"] = nullptr;
  }
  j["theta"] = theta;
  j["p"] = p;
  j["samples"] = samples;
  j["seed"] = seed;
  j["format"] = format;
  j["out"] = out;
  j["cache"] = cache;
  j["precision_bits"] = precision_bits;
  j["approx_correlators"] = approx_correlators;
  j["indices"] = indices;
  j["n"] = n;
  j["n_list"] = n_list;
  j["methods"] = methods;
  j["ordering"] = ordering;
  return j.dump();
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Random multicurves on surfaces of large genus: exact measures, samplers, moments"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  std::string genus, m = "inf", kappa, p = "1", indices, n_list, methods = "exact,mc";
  app.add_option("--genus", genus, "genus, or a comma list for converge")->envname("MCL_GENUS");
  app.add_option("--m", m, "multiplicity bound: 1, 2, ... or inf")->envname("MCL_M");
  app.add_option("--kappa", kappa, "truncation parameter (> 1); default 1.5 where needed")->envname("MCL_KAPPA");
  app.add_option("--theta", c.theta, "GEM / PD parameter")->envname("MCL_THETA");
  app.add_option("--p", p, "moment indices, ';' between several, e.g. 1;2;1,1")->envname("MCL_P");
  app.add_option("--samples", c.samples, "Monte Carlo draws")->envname("MCL_SAMPLES");
  app.add_option("--seed", c.seed, "root seed")->envname("MCL_SEED");
  app.add_option("--threads", c.threads, "worker threads")->envname("MCL_THREADS");
  app.add_option("--format", c.format, "csv or json")->envname("MCL_FORMAT");
  app.add_option("--out", c.out, "output file (stdout when empty)")->envname("MCL_OUT");
  app.add_option("--cache", c.cache, "correlator cache file")->envname("MCL_CACHE");
  app.add_option("--precision-bits", c.precision_bits, "0 for exact rationals, 53 for double")
      ->envname("MCL_PRECISION_BITS");
  app.add_flag("--approx-correlators", c.approx_correlators, "replace c~ by 1 in the large-genus sampler")
      ->envname("MCL_APPROX_CORRELATORS");
  app.add_option("--indices", indices, "correlator: d_1,...,d_n");
  app.add_option("--n", n_list, "volume-poly: number of points; asym: comma list of n");
  app.add_option("--method", methods, "moments: comma list of exact, mc, gem, pd, asymptotic");
  app.add_option("--ordering", c.ordering, "sample: sorted, size-biased or unordered");

  for (const auto& [name, about] : kCommands) app.add_subcommand(name, about);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  c.command = app.get_subcommands().front()->get_name();
  c.genus = parse_int_list(genus);
  try {
    c.m = MultBound::parse(m);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--m: ") + e.what());
  }
  if (!kappa.empty()) {
    std::size_t used = 0;
    double k = 0;
    try {
      k = std::stod(kappa, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != kappa.size() || !std::isfinite(k)) throw UsageError("--kappa: not a number");
    c.kappa = k;
  }
  c.p = split(p, ';');
  if (c.p.empty()) throw UsageError("--p: empty");
  c.indices = parse_int_list(indices);
  c.n_list = parse_int_list(n_list);
  if (c.n_list.size() == 1) c.n = c.n_list.front();
  c.methods = split(methods, ',');
  c.validate();
  return c;
}

}  // namespace mcl::cli
