#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mcl/intersection/correlators.hpp"

namespace mcl {

// Text cache of correlator values:
//
//   psi-cache v1
//   <g> <n> <d_1> ... <d_n> <p>/<q>      one record per line, cache order
//   checksum <16 hex digits>             FNV-1a 64 of every preceding byte
//
// Each record keeps its indices in nonincreasing order.

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

/// Full file contents for the table. The two seed values are always added.
std::string serialize_cache(CorrelatorTable& table);

/// Parses and verifies `text` into `table`. Throws CacheError on a bad
/// header, malformed or unsorted record, checksum mismatch, or wrong seed
/// values. Returns the checksum.
std::string parse_cache(const std::string& text, CorrelatorTable& table);

struct CacheStatus {
  std::size_t records = 0;
  std::string checksum;
  bool created = false;
};

/// Loads `path` into `table` if it exists (verifying it), then rewrites it
/// from the table. A missing file is created with the seed records.
CacheStatus cache_roundtrip(const std::string& path, CorrelatorTable& table);

/// Loads `path` if it exists; no write.
CacheStatus load_cache(const std::string& path, CorrelatorTable& table);
CacheStatus save_cache(const std::string& path, CorrelatorTable& table);

}  // namespace mcl
