#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace zvk::testing {

std::vector<Letter> stack_reduce(const std::vector<Letter>& letters) {
  std::vector<std::pair<Symbol, int>> stack;
  for (const auto& l : letters) {
    const int sign = l.exp > 0 ? 1 : -1;
    for (Exponent i = 0; i < (l.exp > 0 ? l.exp : -l.exp); ++i) {
      if (!stack.empty() && stack.back().first == l.gen && stack.back().second == -sign) {
        stack.pop_back();
      } else {
        stack.emplace_back(l.gen, sign);
      }
    }
  }
  std::vector<Letter> out;
  for (const auto& [g, s] : stack) {
    if (!out.empty() && out.back().gen == g) {
      out.back().exp += s;
    } else {
      out.push_back({g, s});
    }
  }
  return out;
}

namespace {

mpz_class det_over_q(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  if (det.get_den() != 1) throw std::logic_error("non-integral determinant");
  return det.get_num();
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& rows : rs) {
      for (const auto& cols : cs) {
        std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        }
        const mpz_class d = det_over_q(std::move(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    divisors.push_back(g);
  }
  std::vector<mpz_class> factors;
  for (std::size_t k = 1; k <= r; ++k) {
    factors.push_back(divisors[k] == 0 ? mpz_class(0) : mpz_class(divisors[k] / divisors[k - 1]));
  }
  return factors;
}

std::map<std::int64_t, mpz_class> fox_by_letters(const Word& w, Symbol g, const Weights& weights) {
  std::map<std::int64_t, mpz_class> out;
  std::int64_t prefix = 0;
  for (const auto& l : w.letters()) {
    const std::int64_t c = weights.at(l.gen);
    const int sign = l.exp > 0 ? 1 : -1;
    for (Exponent i = 0; i < (l.exp > 0 ? l.exp : -l.exp); ++i) {
      if (l.gen == g) {
        // d(u g)/dg adds t^phi(u); d(u g^-1)/dg adds -t^(phi(u) - c).
        if (sign > 0) {
          out[prefix] += 1;
        } else {
          out[prefix - c] -= 1;
        }
      }
      prefix += sign * c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::size_t metacyclic_order_brute_force(long n, long s, long m) {
  // Element (u, v, b): x -> u x + v on Z/n, paired with b in Z/m.
  struct Elt {
    long u, v, b;
    auto operator<=>(const Elt&) const = default;
  };
  const auto mod = [](long a, long k) { return ((a % k) + k) % k; };
  // Composition "first x then y", so words read left to right.
  const auto mul = [&](const Elt& x, const Elt& y) {
    return Elt{mod(x.u * y.u, n), mod(y.u * x.v + y.v, n), mod(x.b + y.b, m)};
  };
  const auto power = [&](Elt x, long k) {
    Elt r{1 % n, 0, 0};
    for (long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  };
  long s_inv = 0;
  for (long t = 0; t < n; ++t) {
    if (mod(t * s, n) == 1 % n) s_inv = t;
  }
  const Elt p{1 % n, 1 % n, 0};
  Elt g{};
  // Pick the scaling that realizes g^-1 p g = p^s.
  bool found = false;
  for (long scale : {s, s_inv}) {
    const Elt cand{mod(scale, n), 0, 1 % m};
    const Elt cand_inv = power(cand, m * n - 1);
    if (mul(mul(cand_inv, p), cand) == power(p, mod(s, n))) {
      g = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("brute force: no faithful model");
  std::set<Elt> seen{Elt{1 % n, 0, 0}};
  std::vector<Elt> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (const auto& x : frontier) {
      for (const auto& y : {p, g}) {
        const Elt z = mul(x, y);
        if (seen.insert(z).second) next.push_back(z);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace zvk::testing
