#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mcl/core/rational.hpp"

namespace mcl {

using Exponents = std::vector<int>;

/// Multivariate polynomial with exact rational coefficients.
///
/// Exponent vectors are stored densely, one entry per variable. Zero
/// coefficients are never stored, so the zero polynomial has no terms.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> variables);

  static SparsePolynomial constant(const Rational& c, std::vector<std::string> variables = {});
  static SparsePolynomial monomial(std::vector<std::string> variables, Exponents exps,
                                   const Rational& c);
  /// Variables named "<prefix>1" ... "<prefix>n".
  static std::vector<std::string> numbered_variables(int n, const std::string& prefix = "x");

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exps; drops the term when the result vanishes.
  void add_term(const Exponents& exps, const Rational& c);
  Rational coefficient(const Exponents& exps) const;

  /// Exact evaluation at a point given in variable order.
  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces every variable x_i by x_i / scale[i].
  SparsePolynomial substitute_scale(std::span<const Rational> scale) const;

  /// Maps variable i onto variable target[i] of a polynomial over
  /// `new_variables`; variables sent to the same target are multiplied.
  SparsePolynomial relabel(std::span<const int> target, std::vector<std::string> new_variables) const;

  /// Reorders or extends the variable list to `variables`, which must
  /// contain every current variable.
  SparsePolynomial with_variables(const std::vector<std::string>& variables) const;

  bool is_homogeneous() const;
  int total_degree() const;  // -1 for the zero polynomial
  std::string str() const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const Rational& c);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyOp { add, mul };

/// poly_arith: sum or product over the union of the two variable sets.
SparsePolynomial poly_arith(const SparsePolynomial& a, const SparsePolynomial& b, PolyOp op);

std::vector<std::string> variable_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

}  // namespace mcl
