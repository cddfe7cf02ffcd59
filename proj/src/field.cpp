#include "zvk/field.hpp"

#include "zvk/error.hpp"

namespace zvk {

QEps QEps::conjugate() const { return {a_ - b_, -b_}; }

mpq_class QEps::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

QEps QEps::inverse() const {
  const mpq_class n = norm();
  if (n == 0) throw Error("division by zero in Q(eps)");
  // x * conj(x) = norm(x)
  const QEps c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

QEps& QEps::operator+=(const QEps& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QEps& QEps::operator-=(const QEps& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QEps& QEps::operator*=(const QEps& o) {
  // (a + b e)(c + d e) = ac + (ad + bc) e + bd e^2, e^2 = -1 - e
  const mpq_class bd = b_ * o.b_;
  const mpq_class a = a_ * o.a_ - bd;
  const mpq_class b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = a;
  b_ = b;
  return *this;
}

QEps pow(QEps x, unsigned k) {
  QEps r = 1;
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

std::string QEps::to_string() const {
  const auto rational = [](const mpq_class& q) { return q.get_str(); };
  if (b_ == 0) return rational(a_);
  std::string eps_part;
  const mpq_class mag = abs(b_);
  if (mag == 1) {
    eps_part = "eps";
  } else if (mag.get_den() == 1) {
    eps_part = mag.get_str() + "*eps";
  } else {
    eps_part = "(" + mag.get_str() + ")*eps";
  }
  if (a_ == 0) return (b_ < 0 ? "-" : "") + eps_part;
  return rational(a_) + (b_ < 0 ? " - " : " + ") + eps_part;
}

}  // namespace zvk
