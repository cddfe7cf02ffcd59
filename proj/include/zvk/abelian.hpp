#pragma once

// Abelianization through the Smith normal form of the relator
// exponent-sum matrix.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zvk/presentation.hpp"

namespace zvk {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws if the rows are ragged.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

/// Exact determinant by fraction-free elimination. Throws unless square.
mpz_class determinant(const IntMatrix& m);

/// Row per relator, column per generator, entry = exponent sum.
IntMatrix relator_matrix(const Presentation& p);

/// D = U M V with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<mpz_class> diagonal() const;
};

/// Pivot is the nonzero entry of smallest absolute value (ties by row, then
/// column). The certificate U M V = D, |det U| = |det V| = 1 and the
/// divisibility chain are checked before returning; a failed check throws
/// std::logic_error.
SmithForm smith_normal_form(const IntMatrix& m);

/// True iff U M V = D, U and V are unimodular, D is diagonal with a
/// nonnegative divisibility chain.
bool verify_smith_form(const IntMatrix& m, const SmithForm& s);

struct AbelianInvariants {
  /// d1 | d2 | ..., each > 1.
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  /// e.g. "Z/3 + Z^1"; the trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace zvk
