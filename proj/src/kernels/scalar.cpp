#include <algorithm>
#include <cmath>

#include "mcl/kernels/kernels.hpp"

namespace mcl::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void sum_sumsq_scalar(const double* x, std::size_t n, double* sum, double* sumsq) {
  double s = 0.0, q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i];
    q += x[i] * x[i];
  }
  *sum = s;
  *sumsq = q;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void convolve_scalar(const double* a, std::size_t na, const double* b, std::size_t nb, double* out,
                     std::size_t n_out) {
  std::fill(out, out + n_out, 0.0);
  for (std::size_t i = 0; i < na && i < n_out; ++i) {
    if (a[i] == 0.0) continue;
    axpy_scalar(a[i], b, out + i, std::min(nb, n_out - i));
  }
}

}  // namespace

const Table& scalar_table() {
  static const Table t{"scalar",         dot_scalar,     axpy_scalar,    scale_scalar,
                       sum_sumsq_scalar, max_abs_scalar, convolve_scalar};
  return t;
}

}  // namespace mcl::kernels
