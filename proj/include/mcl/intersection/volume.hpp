#pragma once

#include "mcl/core/polynomial.hpp"

namespace mcl {

/// Kontsevich polynomial V_{g,n}(x_1, ..., x_n): the coefficient of
/// prod x_i^{2 d_i} is <tau_d>_g / (2^{3g-3+n} prod d_i!). Memoized; the
/// returned reference stays valid for the life of the process.
const SparsePolynomial& volume_polynomial(int genus, int n);

}  // namespace mcl
