#include "mcl/intersection/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace mcl {
namespace {

constexpr const char* kHeader = "psi-cache v1";
constexpr const char* kTrailer = "checksum ";

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_small_int(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.size() > 6) throw CacheError("cache line " + std::to_string(line_no) + ": bad integer");
  int v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw CacheError("cache line " + std::to_string(line_no) + ": bad integer");
    v = v * 10 + (c - '0');
  }
  if (tok.size() > 1 && tok[0] == '0') throw CacheError("cache line " + std::to_string(line_no) + ": bad integer");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read cache file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + path);
    out << text;
    if (!out) throw CacheError("short write on cache file " + path);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string serialize_cache(CorrelatorTable& table) {
  table.get(0, {0, 0, 0});
  table.get(1, {1});
  std::string body = std::string(kHeader) + "\n";
  for (const auto& [key, value] : table.entries()) {
    body += std::to_string(key.genus) + " " + std::to_string(key.n());
    for (int d : key.indices) body += " " + std::to_string(d);
    body += " " + value.str() + "\n";
  }
  return body + kTrailer + hex64(fnv1a64(body)) + "\n";
}

std::string parse_cache(const std::string& text, CorrelatorTable& table) {
  const auto trailer_pos = text.rfind(kTrailer);
  if (text.rfind(std::string(kHeader) + "\n", 0) != 0) throw CacheError("cache: missing header");
  if (trailer_pos == std::string::npos || (trailer_pos > 0 && text[trailer_pos - 1] != '\n')) {
    throw CacheError("cache: missing checksum trailer (truncated file?)");
  }
  const std::string body = text.substr(0, trailer_pos);
  const std::string trailer = text.substr(trailer_pos);
  const std::string expected = std::string(kTrailer) + hex64(fnv1a64(body)) + "\n";
  if (trailer != expected) throw CacheError("cache: checksum mismatch");

  std::vector<std::pair<CorrelatorKey, Rational>> records;
  std::istringstream is(body);
  std::string line;
  std::getline(is, line);  // header
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.size() < 3) throw CacheError("cache line " + std::to_string(line_no) + ": too short");
    const int g = parse_small_int(tok[0], line_no);
    const int n = parse_small_int(tok[1], line_no);
    if (static_cast<int>(tok.size()) != n + 3) {
      throw CacheError("cache line " + std::to_string(line_no) + ": field count");
    }
    std::vector<int> d;
    for (int i = 0; i < n; ++i) d.push_back(parse_small_int(tok[2 + i], line_no));
    CorrelatorKey key = CorrelatorKey::make(g, d);
    if (key.indices != d) throw CacheError("cache line " + std::to_string(line_no) + ": unsorted indices");
    if (!key.stable() || !key.dimension_ok()) {
      throw CacheError("cache line " + std::to_string(line_no) + ": invalid key");
    }
    Rational v;
    try {
      v = Rational::parse(tok.back(), true);
    } catch (const std::exception&) {
      throw CacheError("cache line " + std::to_string(line_no) + ": bad value");
    }
    if (!records.empty() && !cache_order(records.back().first, key)) {
      throw CacheError("cache line " + std::to_string(line_no) + ": records out of order");
    }
    records.emplace_back(std::move(key), v);
  }
  auto find = [&](const CorrelatorKey& k) -> const Rational* {
    for (const auto& [rk, rv] : records) {
      if (rk == k) return &rv;
    }
    return nullptr;
  };
  const Rational* s0 = find(CorrelatorKey{0, {0, 0, 0}});
  const Rational* s1 = find(CorrelatorKey{1, {1}});
  if (s0 == nullptr || s1 == nullptr || *s0 != Rational(1) || *s1 != Rational(1, 24)) {
    throw CacheError("cache: seed values missing or wrong");
  }
  for (const auto& [k, v] : records) table.insert(k, v);
  return hex64(fnv1a64(body));
}

CacheStatus load_cache(const std::string& path, CorrelatorTable& table) {
  CacheStatus st;
  if (!std::filesystem::exists(path)) return st;
  st.checksum = parse_cache(read_file(path), table);
  st.records = table.size();
  return st;
}

CacheStatus save_cache(const std::string& path, CorrelatorTable& table) {
  const std::string text = serialize_cache(table);
  write_file(path, text);
  CacheStatus st;
  st.records = table.size();
  st.checksum = text.substr(text.rfind(kTrailer) + std::string(kTrailer).size(), 16);
  return st;
}

CacheStatus cache_roundtrip(const std::string& path, CorrelatorTable& table) {
  const bool existed = std::filesystem::exists(path);
  if (existed) load_cache(path, table);
  CacheStatus st = save_cache(path, table);
  st.created = !existed;
  return st;
}

}  // namespace mcl
