#include "mcl/core/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcl {

SparsePolynomial::SparsePolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  std::vector<std::string> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("SparsePolynomial: duplicate variable name");
  }
}

SparsePolynomial SparsePolynomial::constant(const Rational& c, std::vector<std::string> variables) {
  SparsePolynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<std::string> variables, Exponents exps,
                                            const Rational& c) {
  SparsePolynomial p(std::move(variables));
  p.add_term(exps, c);
  return p;
}

std::vector<std::string> SparsePolynomial::numbered_variables(int n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void SparsePolynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size()) {
    throw std::invalid_argument("SparsePolynomial: exponent vector length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational acc;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= point[i].pow(exps[i]);
    }
    acc += term;
  }
  return acc;
}

SparsePolynomial SparsePolynomial::substitute_scale(std::span<const Rational> scale) const {
  if (scale.size() != vars_.size()) throw std::invalid_argument("substitute_scale: arity mismatch");
  for (const auto& s : scale) {
    if (s.is_zero()) throw std::domain_error("substitute_scale: zero scale");
  }
  SparsePolynomial out(vars_);
  for (const auto& [exps, c] : terms_) {
    Rational factor = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) factor /= scale[i].pow(exps[i]);
    }
    out.terms_.emplace(exps, factor);
  }
  return out;
}

SparsePolynomial SparsePolynomial::relabel(std::span<const int> target,
                                           std::vector<std::string> new_variables) const {
  if (target.size() != vars_.size()) throw std::invalid_argument("relabel: arity mismatch");
  SparsePolynomial out(std::move(new_variables));
  const int n = static_cast<int>(out.vars_.size());
  for (int t : target) {
    if (t < 0 || t >= n) throw std::out_of_range("relabel: target index out of range");
  }
  Exponents mapped(out.vars_.size());
  for (const auto& [exps, c] : terms_) {
    std::fill(mapped.begin(), mapped.end(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) mapped[static_cast<std::size_t>(target[i])] += exps[i];
    out.add_term(mapped, c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::with_variables(const std::vector<std::string>& variables) const {
  std::vector<int> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end()) throw std::invalid_argument("with_variables: missing variable " + vars_[i]);
    target[i] = static_cast<int>(it - variables.begin());
  }
  return relabel(target, variables);
}

bool SparsePolynomial::is_homogeneous() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) {
    const int d = std::accumulate(exps.begin(), exps.end(), 0);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

int SparsePolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  return deg;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  if (vars_ != o.vars_) {
    *this = poly_arith(*this, o, PolyOp::add);
    return *this;
  }
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_arith(a, b, PolyOp::add);
}

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_arith(a, b * Rational(-1), PolyOp::add);
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_arith(a, b, PolyOp::mul);
}

SparsePolynomial operator*(const SparsePolynomial& a, const Rational& c) {
  SparsePolynomial out = a;
  out *= c;
  return out;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const auto vars = variable_union(a.vars_, b.vars_);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::vector<std::string> variable_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

SparsePolynomial poly_arith(const SparsePolynomial& a, const SparsePolynomial& b, PolyOp op) {
  const auto vars = variable_union(a.variables(), b.variables());
  const SparsePolynomial lhs = a.variables() == vars ? a : a.with_variables(vars);
  const SparsePolynomial rhs = b.variables() == vars ? b : b.with_variables(vars);
  SparsePolynomial out(vars);
  if (op == PolyOp::add) {
    for (const auto& [exps, c] : lhs.terms()) out.add_term(exps, c);
    for (const auto& [exps, c] : rhs.terms()) out.add_term(exps, c);
    return out;
  }
  Exponents sum(vars.size());
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

}  // namespace mcl
