#include "zvk/metacyclic.hpp"

#include <numeric>

#include "zvk/error.hpp"

namespace zvk {

namespace {

Exponent mod(Exponent a, Exponent n) {
  Exponent r = a % n;
  return r < 0 ? r + n : r;
}

Exponent mulmod(Exponent a, Exponent b, Exponent n) {
  return static_cast<Exponent>((static_cast<__int128>(a) * b) % n);
}

Exponent powmod(Exponent base, Exponent e, Exponent n) {
  Exponent r = 1 % n;
  base = mod(base, n);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return r;
}

Exponent inverse_mod(Exponent a, Exponent n) {
  // Extended Euclid; caller guarantees gcd(a, n) = 1.
  Exponent old_r = mod(a, n), r = n, old_x = 1, x = 0;
  while (r != 0) {
    Exponent q = old_r / r;
    Exponent t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
  }
  return mod(old_x, n);
}

}  // namespace

MetacyclicForm::MetacyclicForm(Exponent n, Exponent s) : n_(n) {
  if (n <= 0) throw Error("metacyclic form needs n > 0");
  s_ = mod(s, n);
  if (std::gcd(s_, n_) != 1) throw Error("metacyclic form needs gcd(s, n) = 1");
  s_inv_ = inverse_mod(s_, n_);
}

Exponent MetacyclicForm::s_power(Exponent k) const {
  return k >= 0 ? powmod(s_, k, n_) : powmod(s_inv_, -k, n_);
}

Presentation MetacyclicForm::presentation(Symbol p, Symbol g) const {
  return Presentation({p, g}, {Word{{p, n_}}, Word{{g, -1}, {p, 1}, {g, 1}, {p, -s_}}});
}

MetacyclicElement multiply(const MetacyclicForm& m, MetacyclicElement x, MetacyclicElement y) {
  return {mod(x.a + mulmod(m.s_power(-x.b), y.a, m.n()), m.n()), add_exponents(x.b, y.b)};
}

MetacyclicElement metacyclic_normal_form(const MetacyclicForm& m, const Word& w, Symbol p,
                                         Symbol g) {
  MetacyclicElement acc;
  for (const auto& l : w.letters()) {
    if (l.gen == p) {
      acc = multiply(m, acc, {mod(l.exp, m.n()), 0});
    } else if (l.gen == g) {
      acc.b = add_exponents(acc.b, l.exp);
    } else {
      throw Error("metacyclic_normal_form: foreign generator " + l.gen.name());
    }
  }
  return acc;
}

std::optional<MetacyclicCore> find_metacyclic_core(const Presentation& pres) {
  const auto& gens = pres.generators();
  const auto& rels = pres.relators();
  if (gens.size() != 2) return std::nullopt;

  std::optional<MetacyclicCore> best;
  Exponent best_length = 0;
  for (std::size_t pi = 0; pi < rels.size(); ++pi) {
    const auto pl = rels[pi].letters();
    if (pl.size() != 1) continue;
    const Symbol x = pl[0].gen;
    const Exponent n = pl[0].exp < 0 ? -pl[0].exp : pl[0].exp;
    const Symbol y = gens[0] == x ? gens[1] : gens[0];

    for (std::size_t ci = 0; ci < rels.size(); ++ci) {
      const Word core = rels[ci].cyclically_reduced();
      if (core.syllables() != 4) continue;
      for (const Word& candidate : {core, core.inverse()}) {
        for (std::size_t r = 0; r < 4; ++r) {
          const Word w = candidate.rotated(r);
          const auto l = w.letters();
          // y^-1 x^a y x^b, a = +-1, means y^-1 x y = x^(-a b).
          if (!(l[0].gen == y && l[0].exp == -1 && l[1].gen == x &&
                (l[1].exp == 1 || l[1].exp == -1) && l[2].gen == y && l[2].exp == 1 &&
                l[3].gen == x)) {
            continue;
          }
          const Exponent s = mod(-l[1].exp * l[3].exp, n);
          if (std::gcd(s, n) != 1) continue;
          const Exponent length = rels[ci].length();
          if (!best || length < best_length) {
            best = MetacyclicCore{MetacyclicForm(n, s), x, y, pi, ci};
            best_length = length;
          }
        }
      }
    }
  }
  return best;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic_group: order must be positive");
  return FiniteGroup{n, 0, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
                     [n](std::size_t a) { return (n - a) % n; }};
}

FiniteGroup semidirect_product(std::size_t n, std::size_t m, Exponent s) {
  if (n == 0 || m == 0) throw Error("semidirect_product: orders must be positive");
  const MetacyclicForm form(static_cast<Exponent>(n), s);
  if (powmod(form.s(), static_cast<Exponent>(m), form.n()) != 1 % form.n()) {
    throw Error("semidirect_product: s^m must be 1 mod n");
  }
  const auto encode = [n, m](MetacyclicElement e) {
    return static_cast<std::size_t>(e.a) +
           n * static_cast<std::size_t>(mod(e.b, static_cast<Exponent>(m)));
  };
  const auto decode = [n](std::size_t x) {
    return MetacyclicElement{static_cast<Exponent>(x % n), static_cast<Exponent>(x / n)};
  };
  auto mul = [form, encode, decode](std::size_t x, std::size_t y) {
    return encode(multiply(form, decode(x), decode(y)));
  };
  auto inv = [form, encode, decode](std::size_t x) {
    const auto e = decode(x);
    // (a, b)^-1 = (-s^b a, -b)
    return encode({mod(-mulmod(form.s_power(e.b), e.a, form.n()), form.n()), -e.b});
  };
  return FiniteGroup{n * m, 0, mul, inv};
}

std::size_t element_order(const FiniteGroup& group, std::size_t x) {
  std::size_t k = 1;
  std::size_t y = x;
  while (y != group.identity) {
    y = group.multiply(y, x);
    if (++k > group.order) throw Error("element_order: oracle is not a group");
  }
  return k;
}

std::size_t evaluate(const FiniteGroup& group, const std::map<Symbol, std::size_t>& images,
                     const Word& w) {
  std::size_t acc = group.identity;
  for (const auto& l : w.letters()) {
    const auto it = images.find(l.gen);
    if (it == images.end()) throw Error("no image for generator " + l.gen.name());
    const std::size_t base = l.exp > 0 ? it->second : group.inverse(it->second);
    const Exponent reps = l.exp > 0 ? l.exp : -l.exp;
    // Powers only matter modulo the order of the base element.
    const auto period = static_cast<Exponent>(element_order(group, base));
    for (Exponent i = 0; i < reps % period; ++i) acc = group.multiply(acc, base);
  }
  return acc;
}

bool verify_homomorphism(const Presentation& p, const std::map<Symbol, std::size_t>& images,
                         const FiniteGroup& target) {
  for (Symbol g : p.generators()) {
    if (!images.contains(g)) throw Error("no image for generator " + g.name());
  }
  for (const auto& r : p.relators()) {
    if (evaluate(target, images, r) != target.identity) return false;
  }
  return true;
}

Exponent multiplicative_order(Exponent s, Exponent n) {
  if (std::gcd(mod(s, n), n) != 1) throw Error("multiplicative_order: s not a unit mod n");
  Exponent k = 1;
  Exponent x = mod(s, n);
  while (x != 1 % n) {
    x = mulmod(x, s, n);
    ++k;
  }
  return k;
}

CommutantReport commutant_report(const MetacyclicForm& m, Symbol p, Symbol g) {
  const Exponent n = m.n();
  const Exponent d = std::gcd(mod(m.s() - 1, n), n);
  CommutantReport report{
      d % n == 0 ? Word{} : Word::generator(p, d),
      n / d,
      mulmod(m.s(), d, n) == mod(d, n),
      false,
  };

  // Certify the order in Z_n x| <s>, where p has order exactly n.
  const Exponent k = multiplicative_order(m.s(), n);
  const FiniteGroup target =
      semidirect_product(static_cast<std::size_t>(n), static_cast<std::size_t>(k), m.s());
  const std::map<Symbol, std::size_t> images{{p, 1 % static_cast<std::size_t>(n)},
                                             {g, static_cast<std::size_t>(n) % target.order}};
  if (verify_homomorphism(m.presentation(p, g), images, target)) {
    const std::size_t image = evaluate(target, images, report.generator);
    report.order_certified =
        element_order(target, image) == static_cast<std::size_t>(report.order);
  }
  return report;
}

}  // namespace zvk
