#include "zvk/multipoly.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "zvk/error.hpp"

namespace zvk {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::ptrdiff_t position(const std::vector<std::string>& vars, const std::string& v) {
  const auto it = std::lower_bound(vars.begin(), vars.end(), v);
  return it != vars.end() && *it == v ? it - vars.begin() : -1;
}

void check_same_field(const MultiPoly& a, const MultiPoly& b) {
  if (a.field() != b.field()) throw Error("coefficient field mismatch");
}

}  // namespace

MultiPoly::MultiPoly(QEps constant, Field field) : field_(field) {
  check_coefficient(constant);
  if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

MultiPoly MultiPoly::variable(const std::string& name, Field field) {
  MultiPoly p(field);
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, QEps(1));
  return p;
}

void MultiPoly::check_coefficient(const QEps& c) const {
  if (field_ == Field::Rational && !c.is_rational()) {
    throw Error("eps coefficient in a polynomial over Q");
  }
}

void MultiPoly::add_term(const std::vector<std::string>& vars, const Exponents& e,
                         const QEps& c) {
  // vars must be a subset of vars_.
  Exponents mapped(vars_.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    mapped[static_cast<std::size_t>(position(vars_, vars[i]))] = e[i];
  }
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::move(mapped), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& vars) const {
  MultiPoly r(field_);
  r.vars_ = vars;
  for (const auto& [e, c] : terms_) r.add_term(vars_, e, c);
  return r;
}

void MultiPoly::prune() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  Terms terms;
  for (auto& [e, c] : terms_) {
    Exponents f;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) f.push_back(e[i]);
    }
    terms.emplace(std::move(f), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

QEps MultiPoly::constant_term() const {
  const auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? QEps() : it->second;
}

unsigned MultiPoly::degree(const std::string& var) const {
  const auto i = position(vars_, var);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

unsigned MultiPoly::valuation(const std::string& var) const {
  const auto i = position(vars_, var);
  if (i < 0 || terms_.empty()) return 0;
  unsigned v = terms_.begin()->first[static_cast<std::size_t>(i)];
  for (const auto& [e, c] : terms_) v = std::min(v, e[static_cast<std::size_t>(i)]);
  return v;
}

MultiPoly MultiPoly::coefficient(const std::string& var, unsigned k) const {
  const auto i = position(vars_, var);
  MultiPoly r(field_);
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    const unsigned have = i < 0 ? 0 : e[static_cast<std::size_t>(i)];
    if (have != k) continue;
    Exponents f = e;
    if (i >= 0) f[static_cast<std::size_t>(i)] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  r.prune();
  return r;
}

MultiPoly MultiPoly::with_field(Field field) const {
  MultiPoly r = *this;
  r.field_ = field;
  for (const auto& [e, c] : terms_) r.check_coefficient(c);
  return r;
}

QEps MultiPoly::evaluate(const std::map<std::string, QEps>& point) const {
  std::vector<QEps> values;
  for (const auto& v : vars_) {
    const auto it = point.find(v);
    if (it == point.end()) throw Error("evaluate: no value for variable " + v);
    values.push_back(it->second);
  }
  QEps sum;
  for (const auto& [e, c] : terms_) {
    QEps t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= pow(values[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  std::vector<const MultiPoly*> image(vars_.size(), nullptr);
  std::vector<MultiPoly> kept;
  kept.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = images.find(vars_[i]);
    if (it != images.end()) {
      check_same_field(*this, it->second);
      image[i] = &it->second;
    } else {
      kept.push_back(variable(vars_[i], field_));
      image[i] = &kept.back();
    }
  }
  MultiPoly sum(field_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t(c, field_);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t = t * pow(*image[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  const auto i = position(vars_, var);
  MultiPoly r(field_);
  if (i < 0) return r;
  const auto at = static_cast<std::size_t>(i);
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[at] == 0) continue;
    Exponents f = e;
    --f[at];
    r.terms_.emplace(std::move(f), c * QEps(static_cast<long>(e[at])));
  }
  r.prune();
  return r;
}

MultiPoly MultiPoly::homogenize(const std::string& w) const {
  if (position(vars_, w) >= 0) throw Error("homogenize: variable " + w + " already in use");
  const unsigned d = total_degree();
  MultiPoly r(field_);
  r.vars_ = merge_vars(vars_, {w});
  for (const auto& [e, c] : terms_) {
    std::vector<std::string> vars = vars_;
    Exponents f = e;
    unsigned s = 0;
    for (unsigned k : e) s += k;
    vars.push_back(w);
    f.push_back(d - s);
    r.add_term(vars, f, c);
  }
  r.prune();
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      negative = c.a() < 0;
      const mpq_class mag = abs(c.a());
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      s += negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    s += coeff;
    if (!coeff.empty() && !mono.empty()) s += '*';
    s += mono;
  }
  return s;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_field(*this, o);
  if (vars_ != o.vars_) *this = embedded(merge_vars(vars_, o.vars_));
  for (const auto& [e, c] : o.terms_) add_term(o.vars_, e, c);
  prune();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_field(a, b);
  MultiPoly r(a.field_);
  r.vars_ = merge_vars(a.vars_, b.vars_);
  const MultiPoly x = a.embedded(r.vars_);
  const MultiPoly y = b.embedded(r.vars_);
  for (const auto& [e, c] : x.terms_) {
    for (const auto& [f, d] : y.terms_) {
      MultiPoly::Exponents g(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) g[i] = e[i] + f[i];
      r.add_term(r.vars_, g, c * d);
    }
  }
  r.prune();
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly r(QEps(1), p.field());
  MultiPoly base = p;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  check_same_field(a, b);
  const auto vars = merge_vars(a.variables(), b.variables());
  const auto lead_of = [&vars](const MultiPoly& p) {
    // Leading exponent vector over the merged variable list.
    MultiPoly::Exponents e(vars.size(), 0);
    const auto& [pe, pc] = *p.terms().begin();
    for (std::size_t i = 0; i < pe.size(); ++i) {
      e[static_cast<std::size_t>(position(vars, p.variables()[i]))] = pe[i];
    }
    return std::pair{e, pc};
  };
  const auto [be, bc] = lead_of(b);
  const QEps bc_inv = bc.inverse();
  MultiPoly q(a.field());
  MultiPoly r = a;
  while (!r.is_zero()) {
    const auto [re, rc] = lead_of(r);
    MultiPoly t(rc * bc_inv, a.field());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < be[i]) throw Error("divide_exact: not divisible");
      if (re[i] > be[i]) t = t * pow(MultiPoly::variable(vars[i], a.field()), re[i] - be[i]);
    }
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  const Field field = m[0].empty() ? Field::Rational : m[0][0].field();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  }
  bool negate = false;
  MultiPoly prev(QEps(1), field);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(field);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = MultiPoly(field);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  check_same_field(f, g);
  const unsigned m = f.degree(var);
  const unsigned n = g.degree(var);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.field());
  // A factor of degree 0 in var contributes its (deg of the other) power.
  if (m == 0) return pow(f, n);
  if (n == 0) return pow(g, m);
  const std::size_t size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(f.field())));
  // Rows 0..n-1 hold shifted coefficients of f, rows n..n+m-1 those of g,
  // highest power first.
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned k = 0; k <= m; ++k) s[i][i + (m - k)] = f.coefficient(var, k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (unsigned k = 0; k <= n; ++k) s[n + i][i + (n - k)] = g.coefficient(var, k);
  }
  return determinant(std::move(s));
}

}  // namespace zvk
