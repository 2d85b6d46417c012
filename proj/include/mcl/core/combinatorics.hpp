#pragma once

#include <vector>

#include "mcl/core/rational.hpp"

namespace mcl {

BigInt factorial(int n);
/// n!! with the usual convention (-1)!! = 1. Throws for n < -1.
BigInt double_factorial(int n);
BigInt binomial(int n, int k);

enum class CombinatorialKind { factorial, double_factorial, binomial };

/// Uniform entry point over the exact combinatorial scalars.
Rational combinatorial_scalar(CombinatorialKind kind, const std::vector<int>& args);

/// Bernoulli number B_n (B_1 = -1/2 convention), exact.
Rational bernoulli(int n);

}  // namespace mcl
