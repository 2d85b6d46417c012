#pragma once

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace mcl {

/// Reproducible stream: the same (seed, stream_index, tag) always yields the
/// same draws. Workers own disjoint stream indices.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index, std::uint64_t tag = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return index_; }

  std::uint64_t next() { return eng_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1).
  double uniform_open() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  double exponential();
  /// Gamma(shape, 1) for integer shape, as a sum of exponentials.
  double gamma_int(int shape);

 private:
  std::uint64_t seed_, index_;
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kBlockSize = 4096;

/// Splits `draws` into blocks of kBlockSize; block b runs on stream
/// (seed, b, tag). Results come back in block order whatever `threads` is.
template <class R, class F>
std::vector<R> run_blocks(std::uint64_t draws, std::uint64_t seed, std::uint64_t tag, int threads, F&& fn) {
  const std::uint64_t blocks = (draws + kBlockSize - 1) / kBlockSize;
  std::vector<R> out(blocks);
  auto work = [&](std::uint64_t first) {
    for (std::uint64_t b = first; b < blocks; b += static_cast<std::uint64_t>(threads)) {
      RandomStream rs(seed, b, tag);
      const std::uint64_t begin = b * kBlockSize;
      const std::uint64_t end = std::min(draws, begin + kBlockSize);
      out[b] = fn(rs, begin, end);
    }
  };
  if (threads <= 1 || blocks <= 1) {
    threads = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::uint64_t>(t));
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace mcl
