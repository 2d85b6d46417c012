#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mcl/kernels/kernels.hpp"

using namespace mcl::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels on small inputs") {
  const Table& t = scalar_table();
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  CHECK(t.dot(a.data(), b.data(), 3) == 32.0);
  std::vector<double> y{1, 1, 1};
  t.axpy(2.0, a.data(), y.data(), 3);
  CHECK(y == std::vector<double>{3, 5, 7});
  t.scale(0.5, y.data(), 3);
  CHECK(y == std::vector<double>{1.5, 2.5, 3.5});
  double s = 0, q = 0;
  t.sum_sumsq(a.data(), 3, &s, &q);
  CHECK(s == 6.0);
  CHECK(q == 14.0);
  const std::vector<double> neg{1, -7, 3};
  CHECK(t.max_abs(neg.data(), 3) == 7.0);
  std::vector<double> out(4);
  t.convolve(a.data(), 3, b.data(), 3, out.data(), 4);
  CHECK(out == std::vector<double>{4, 13, 28, 27});
}

TEST_CASE("dispatch picks an available table") {
  const Table& t = active();
  CHECK(t.dot != nullptr);
  if (avx2_supported()) CHECK(avx2_table() != nullptr);
}

TEST_CASE("avx2 kernels match scalar kernels") {
  const Table* v = avx2_table();
  if (v == nullptr || !avx2_supported()) return;
  const Table& s = scalar_table();
  std::mt19937_64 rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const double ds = s.dot(a.data(), b.data(), n);
    const double dv = v->dot(a.data(), b.data(), n);
    CHECK(std::fabs(ds - dv) <= 1e-12 * (1.0 + std::fabs(ds)) * std::sqrt(double(n) + 1.0));

    // axpy and scale round identically: no fused operations on either side
    auto ys = b, yv = b;
    s.axpy(0.37, a.data(), ys.data(), n);
    v->axpy(0.37, a.data(), yv.data(), n);
    CHECK(ys == yv);
    s.scale(-1.3, ys.data(), n);
    v->scale(-1.3, yv.data(), n);
    CHECK(ys == yv);
    CHECK(s.max_abs(a.data(), n) == v->max_abs(a.data(), n));

    double s1, q1, s2, q2;
    s.sum_sumsq(a.data(), n, &s1, &q1);
    v->sum_sumsq(a.data(), n, &s2, &q2);
    CHECK(std::fabs(s1 - s2) <= 1e-12 * (1.0 + double(n)));
    CHECK(std::fabs(q1 - q2) <= 1e-12 * (1.0 + double(n)));

    std::vector<double> cs(n + 3), cv(n + 3);
    s.convolve(a.data(), n, b.data(), n, cs.data(), cs.size());
    v->convolve(a.data(), n, b.data(), n, cv.data(), cv.size());
    CHECK(cs == cv);
  }
}
