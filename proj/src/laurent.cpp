#include "zvk/laurent.hpp"

#include <sstream>

#include "zvk/error.hpp"

namespace zvk {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t k, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(std::int64_t k, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly::coefficient(std::int64_t k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return {};
  const std::int64_t shift = min_exponent();
  const bool flip = terms_.begin()->second < 0;
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k - shift, flip ? mpz_class(-c) : c);
  return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class& x) const {
  mpq_class sum = 0;
  for (const auto& [k, c] : terms_) {
    mpq_class power = 1;
    const mpq_class base = k >= 0 ? x : mpq_class(1) / x;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) power *= base;
    sum += power * c;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto k = it->first;
    mpz_class c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
  }
  return r;
}

// ------------------------------------------------------ dense Z[t] helpers

namespace {

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly sub(const DensePoly& a, const DensePoly& b) {
  DensePoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

DensePoly scale(const DensePoly& a, const mpz_class& c) {
  DensePoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

mpz_class content(const DensePoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

DensePoly primitive_part(const DensePoly& p) {
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  DensePoly r = p;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

// Remainder of lc(b)^(deg a - deg b + 1) * a by b.
DensePoly pseudo_remainder(DensePoly a, const DensePoly& b) {
  const mpz_class& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpz_class top = a.back();
    for (auto& x : a) x *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::pair<std::int64_t, DensePoly> to_dense(const LaurentPoly& l) {
  if (l.is_zero()) return {0, {}};
  const std::int64_t shift = l.min_exponent();
  DensePoly p(static_cast<std::size_t>(l.max_exponent() - shift + 1));
  for (const auto& [k, c] : l.terms()) p[static_cast<std::size_t>(k - shift)] = c;
  return {shift, p};
}

LaurentPoly from_dense(const DensePoly& p, std::int64_t shift) {
  LaurentPoly r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    r += LaurentPoly::monomial(static_cast<std::int64_t>(i) + shift, p[i]);
  }
  return r;
}

DensePoly divide_exact(const DensePoly& a, const DensePoly& b) {
  if (b.empty()) throw Error("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("divide_exact: not divisible");
  DensePoly rem = a;
  DensePoly q(a.size() - b.size() + 1);
  const mpz_class& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = rem[k + b.size() - 1];
    if (top % lead != 0) throw Error("divide_exact: not divisible");
    q[k] = top / lead;
    if (q[k] == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= q[k] * b[i];
  }
  trim(rem);
  if (!rem.empty()) throw Error("divide_exact: not divisible");
  trim(q);
  return q;
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  if (a.empty() && b.empty()) return {};
  if (a.empty()) return b.back() < 0 ? scale(b, -1) : b;
  if (b.empty()) return a.back() < 0 ? scale(a, -1) : a;
  mpz_class c;
  const mpz_class ca = content(a);
  const mpz_class cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  DensePoly x = primitive_part(a);
  DensePoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    DensePoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return scale(primitive_part(x), c);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return from_dense(gcd(to_dense(a).second, to_dense(b).second)).normalized();
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  }
  // Shift every row into Z[t]; the determinant picks up t^(sum of shifts).
  std::int64_t total_shift = 0;
  std::vector<std::vector<DensePoly>> a(n, std::vector<DensePoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row_min = 0;
    bool any = false;
    for (const auto& e : m[i]) {
      if (e.is_zero()) continue;
      row_min = any ? std::min(row_min, e.min_exponent()) : e.min_exponent();
      any = true;
    }
    if (!any) return {};
    total_shift += row_min;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].is_zero()) continue;
      const auto [shift, dense] = to_dense(m[i][j]);
      DensePoly padded(static_cast<std::size_t>(shift - row_min));
      padded.insert(padded.end(), dense.begin(), dense.end());
      a[i][j] = std::move(padded);
    }
  }

  bool negate = false;
  DensePoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  LaurentPoly det = from_dense(a[n - 1][n - 1], total_shift);
  return negate ? -det : det;
}

}  // namespace zvk
