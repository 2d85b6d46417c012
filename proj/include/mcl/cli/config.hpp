#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcl/measure/zeta.hpp"

namespace mcl::cli {

inline constexpr double kDefaultKappa = 1.5;

/// Exit 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exit 3: the request is past what exact mode can do here.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<int> genus;
  MultBound m = MultBound::infinity();
  std::optional<double> kappa;  // kDefaultKappa where a truncation is needed
  double theta = 0.5;
  std::vector<std::string> p{"1"};  // one moment index per entry, e.g. "1,1"
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "csv";
  std::string out;
  std::string cache;
  int precision_bits = 53;
  bool approx_correlators = false;
  // per-command extras
  std::vector<int> indices;
  int n = 0;
  std::vector<int> n_list;
  std::vector<std::string> methods{"exact", "mc"};
  std::string ordering = "sorted";

  double kappa_or_default() const { return kappa.value_or(kDefaultKappa); }
  int single_genus() const;
  /// Throws UsageError on an inconsistent configuration.
  void validate() const;
  /// Every field except threads, which never changes the output.
  std::string to_json() const;
};

/// Parses argv (CLI11, with MCL_* environment fallbacks). Returns nullopt
/// after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace mcl::cli
