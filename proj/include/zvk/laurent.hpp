#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zvk {

/// Integer Laurent polynomial in t. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  /// c * t^k
  static LaurentPoly monomial(std::int64_t k, const mpz_class& c = 1);

  const std::map<std::int64_t, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(std::int64_t k) const;
  /// Lowest and highest exponent; undefined for zero.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Multiplies by the unit +-t^k so that the lowest exponent is 0 and the
  /// constant term is positive. Zero stays zero.
  LaurentPoly normalized() const;

  /// Value at t = x.
  mpq_class evaluate(const mpq_class& x) const;

  /// "t^2 - t + 1", "0", "1", "t^-1 + 2".
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(std::int64_t k, const mpz_class& c);

  std::map<std::int64_t, mpz_class> terms_;
};

/// Dense integer polynomial, coefficient i belongs to t^i; no trailing zeros.
using DensePoly = std::vector<mpz_class>;

/// t^-min * L as a dense polynomial, with the shift min.
std::pair<std::int64_t, DensePoly> to_dense(const LaurentPoly& l);
LaurentPoly from_dense(const DensePoly& p, std::int64_t shift = 0);

/// Exact quotient a / b in Z[t]; throws if b does not divide a.
DensePoly divide_exact(const DensePoly& a, const DensePoly& b);

/// gcd in Z[t] by the primitive-part Euclidean algorithm, with the integer
/// content gcd. Leading coefficient positive; gcd(0, 0) = 0.
DensePoly gcd(const DensePoly& a, const DensePoly& b);

/// gcd over Z[t, t^-1], returned normalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact determinant of a square matrix over Z[t, t^-1]. Rows are shifted
/// into Z[t], then fraction-free elimination with exact division.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

}  // namespace zvk
