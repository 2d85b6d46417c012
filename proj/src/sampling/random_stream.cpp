#include "mcl/sampling/random_stream.hpp"

#include <cmath>
#include <stdexcept>

namespace mcl {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index, std::uint64_t tag)
    : seed_(seed), index_(stream_index), eng_(make_engine(seed, stream_index, tag)) {}

std::uint64_t RandomStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RandomStream::below: empty range");
  // rejection keeps the result exactly uniform
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

double RandomStream::exponential() { return -std::log(uniform_open()); }

double RandomStream::gamma_int(int shape) {
  if (shape < 1) throw std::invalid_argument("gamma_int: shape must be positive");
  // products of up to 16 uniforms stay far above the double underflow threshold
  double sum = 0;
  while (shape > 0) {
    const int chunk = std::min(shape, 16);
    double prod = 1;
    for (int i = 0; i < chunk; ++i) prod *= uniform_open();
    sum -= std::log(prod);
    shape -= chunk;
  }
  return sum;
}

}  // namespace mcl
