#include "zvk/abelian.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "zvk/error.hpp"

namespace zvk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged rows");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix relator_matrix(const Presentation& p) {
  const auto& gens = p.generators();
  const auto& rels = p.relators();
  IntMatrix m(rels.size(), gens.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (const auto& l : rels[i].letters()) m(i, p.index_of(l.gen)) += l.exp;
  }
  return m;
}

// ------------------------------------------------------------------ SNF

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| over rows >= t and cols >= t, row-major ties.
std::optional<Pivot> smallest_in_block(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!best || abs(d(i, j)) < abs(d(best->row, best->col))) best = Pivot{i, j};
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t and column t (from t onwards).
Pivot smallest_in_cross(const IntMatrix& d, std::size_t t) {
  Pivot best{t, t};
  for (std::size_t i = t; i < d.rows(); ++i) {
    if (d(i, t) != 0 && (d(best.row, best.col) == 0 || abs(d(i, t)) < abs(d(best.row, best.col)))) {
      best = {i, t};
    }
  }
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (d(t, j) != 0 && (d(best.row, best.col) == 0 || abs(d(t, j)) < abs(d(best.row, best.col)))) {
      best = {t, j};
    }
  }
  return best;
}

void move_to_pivot(SmithForm& s, std::size_t t, Pivot p) {
  s.D.swap_rows(t, p.row);
  s.U.swap_rows(t, p.row);
  s.D.swap_cols(t, p.col);
  s.V.swap_cols(t, p.col);
}

bool is_unimodular(const IntMatrix& m) {
  const mpz_class det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    const auto pivot = smallest_in_block(s.D, t);
    if (!pivot) break;
    move_to_pivot(s, t, *pivot);

    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < s.D.rows(); ++i) {
        if (s.D(i, t) == 0) continue;
        const mpz_class q = s.D(i, t) / s.D(t, t);
        s.D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (s.D(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < s.D.cols(); ++j) {
        if (s.D(t, j) == 0) continue;
        const mpz_class q = s.D(t, j) / s.D(t, t);
        s.D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (s.D(t, j) != 0) clear = false;
      }
      if (!clear) {
        move_to_pivot(s, t, smallest_in_cross(s.D, t));
        continue;
      }
      // Row and column are clear; force the pivot to divide the rest.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s.D.rows() && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < s.D.cols(); ++j) {
          if (s.D(i, j) % s.D(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      s.D.add_row_multiple(t, *bad_row, 1);
      s.U.add_row_multiple(t, *bad_row, 1);
    }
    if (s.D(t, t) < 0) {
      s.D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  if (!verify_smith_form(m, s)) throw std::logic_error("smith_normal_form: certificate failed");
  return s;
}

bool verify_smith_form(const IntMatrix& m, const SmithForm& s) {
  if (s.U.rows() != m.rows() || s.V.cols() != m.cols()) return false;
  if (s.U * m * s.V != s.D) return false;
  for (std::size_t i = 0; i < s.D.rows(); ++i) {
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j && s.D(i, j) != 0) return false;
    }
  }
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (i + 1 < d.size()) {
      // d_i | d_{i+1}; zero divides only zero.
      if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) return false;
    }
  }
  return is_unimodular(s.U) && is_unimodular(s.V);
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const SmithForm s = smith_normal_form(relator_matrix(p));
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const auto& d : s.diagonal()) {
    if (d != 0) ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generators().size() - rank;
  return inv;
}

std::string AbelianInvariants::to_string() const {
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  if (free_rank > 0) {
    if (!s.empty()) s += " + ";
    s += "Z^" + std::to_string(free_rank);
  }
  return s.empty() ? "0" : s;
}

}  // namespace zvk
