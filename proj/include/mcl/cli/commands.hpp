#pragma once

#include <string>
#include <vector>

#include "mcl/cli/config.hpp"
#include "mcl/cli/output.hpp"

namespace mcl::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3, kCacheCorrupt = 4 };

struct RunResult {
  int exit_code = kOk;
  std::string output;  // full rendered document, header first
  std::string error;
};

/// Largest genus for the exact per-graph paths (enumeration, full measure).
inline constexpr int kExactGenusBudget = 6;

/// Runs one subcommand in process. Never throws; errors map to exit codes.
RunResult run(const RunConfig& config);

/// Header line: version, config, and cache checksum ("none" without --cache).
std::string header_line(const RunConfig& config, const std::string& cache_checksum, bool json);

/// Entry point for the mcl binary.
int main(int argc, const char* const* argv);

}  // namespace mcl::cli
