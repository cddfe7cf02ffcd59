#pragma once

// Sparse multivariate polynomials with named variables over Q or Q(eps).
// Monomials are ordered lex with variables compared alphabetically.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zvk/field.hpp"

namespace zvk {

enum class Field { Rational, Eisenstein };

class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  /// Leading term first.
  using Terms = std::map<Exponents, QEps, std::greater<>>;

  explicit MultiPoly(Field field = Field::Rational) : field_(field) {}
  MultiPoly(QEps constant, Field field = Field::Rational);
  static MultiPoly variable(const std::string& name, Field field = Field::Rational);

  Field field() const { return field_; }
  /// Variables that actually occur, sorted.
  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// The constant term.
  QEps constant_term() const;
  unsigned degree(const std::string& var) const;
  unsigned total_degree() const;
  /// Coefficient of var^k, as a polynomial in the other variables.
  MultiPoly coefficient(const std::string& var, unsigned k) const;
  /// Lowest power of var occurring in any term; 0 for the zero polynomial.
  unsigned valuation(const std::string& var) const;

  /// Same polynomial viewed over a larger field. Narrowing to Q throws if
  /// an eps-part is present.
  MultiPoly with_field(Field field) const;

  /// Every variable must be assigned.
  QEps evaluate(const std::map<std::string, QEps>& point) const;
  /// Simultaneous substitution; unassigned variables stay.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
  MultiPoly derivative(const std::string& var) const;
  /// w^d f(x/w, ...) with d the total degree.
  MultiPoly homogenize(const std::string& w) const;

  /// "y^3 + y^2 + x^2 - 4/27"; eps-coefficients are parenthesized.
  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void add_term(const std::vector<std::string>& vars, const Exponents& e, const QEps& c);
  MultiPoly embedded(const std::vector<std::string>& vars) const;
  void prune();
  void check_coefficient(const QEps& c) const;

  Field field_;
  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// a / b when b divides a exactly; throws otherwise.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Resultant with respect to var, as the Sylvester determinant (fraction-free
/// elimination). If one input is free of var the result is its power by the
/// other's degree; the resultant with zero is zero.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Determinant of a square matrix of polynomials (Bareiss).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace zvk
