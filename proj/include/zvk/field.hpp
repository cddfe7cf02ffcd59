#pragma once

// Q(eps) with eps^2 + eps + 1 = 0, i.e. eps a primitive cube root of unity.
// Rationals are the elements with zero eps-part.

#include <gmpxx.h>

#include <string>

namespace zvk {

class QEps {
 public:
  QEps() = default;
  QEps(long a) : a_(a) {}  // NOLINT: rationals embed implicitly
  QEps(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  QEps(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QEps eps() { return {0, 1}; }

  /// a + b*eps
  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Complex conjugate; swaps eps and eps^2 = -1 - eps.
  QEps conjugate() const;
  /// a^2 - ab + b^2, the norm to Q.
  mpq_class norm() const;
  /// Throws on zero.
  QEps inverse() const;

  /// "2/5", "eps", "-1 - eps", "(1/5)*eps".
  std::string to_string() const;

  QEps operator-() const { return {-a_, -b_}; }
  QEps& operator+=(const QEps& o);
  QEps& operator-=(const QEps& o);
  QEps& operator*=(const QEps& o);
  QEps& operator/=(const QEps& o) { return *this *= o.inverse(); }

  friend QEps operator+(QEps x, const QEps& y) { return x += y; }
  friend QEps operator-(QEps x, const QEps& y) { return x -= y; }
  friend QEps operator*(QEps x, const QEps& y) { return x *= y; }
  friend QEps operator/(QEps x, const QEps& y) { return x /= y; }
  friend bool operator==(const QEps&, const QEps&) = default;

 private:
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

QEps pow(QEps x, unsigned k);

}  // namespace zvk
