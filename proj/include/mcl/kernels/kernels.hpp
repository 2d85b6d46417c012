#pragma once

#include <cstddef>

namespace mcl::kernels {

// Dense double-precision kernels. Every entry has a portable scalar
// version; an AVX2 version is picked at runtime when the CPU supports it.
// MCL_KERNEL=scalar in the environment forces the scalar table.

using DotFn = double (*)(const double* a, const double* b, std::size_t n);
using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);
using ScaleFn = void (*)(double alpha, double* x, std::size_t n);
using SumSqFn = void (*)(const double* x, std::size_t n, double* sum, double* sumsq);
using MaxFn = double (*)(const double* x, std::size_t n);
// out[k] = sum_{i+j=k} a[i]*b[j] for k < n_out.
using ConvolveFn = void (*)(const double* a, std::size_t na, const double* b, std::size_t nb,
                            double* out, std::size_t n_out);

struct Table {
  const char* name;
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  SumSqFn sum_sumsq;
  MaxFn max_abs;
  ConvolveFn convolve;
};

const Table& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const Table* avx2_table();
bool avx2_supported();

/// The table chosen for this process. Resolved once.
const Table& active();

}  // namespace mcl::kernels
