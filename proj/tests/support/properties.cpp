#include "properties.hpp"

#include <numeric>

#include "oracles.hpp"
#include "random.hpp"
#include "zvk/abelian.hpp"
#include "zvk/alexander.hpp"
#include "zvk/coset.hpp"
#include "zvk/cover.hpp"
#include "zvk/presentation.hpp"

namespace zvk::testing {

namespace {

// Runs body for each trial; stops at the first failure message.
template <typename Body>
PropertyResult run(std::string name, std::uint32_t seed, int trials, Body&& body) {
  PropertyResult r{std::move(name), true, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!failure.empty()) {
      r.ok = false;
      r.failure = "case " + std::to_string(i) + ": " + failure;
      break;
    }
  }
  return r;
}

const std::vector<Symbol>& abc() {
  static const std::vector<Symbol> g{Symbol("a"), Symbol("b"), Symbol("c")};
  return g;
}

LaurentPoly from_map(const std::map<std::int64_t, mpz_class>& m) {
  LaurentPoly p;
  for (const auto& [k, c] : m) p += LaurentPoly::monomial(k, c);
  return p;
}

}  // namespace

PropertyResult free_reduction_idempotent(std::uint32_t seed, int trials) {
  return run("free reduction idempotent", seed, trials, [](Rng& rng) -> std::string {
    const auto letters = random_letters(rng, abc(), 30, 3);
    const Word w(letters);
    if (Word(w.letters()) != w) return "reduce(reduce(w)) != reduce(w) for " + w.to_string();
    if (std::vector<Letter>(w.letters().begin(), w.letters().end()) != stack_reduce(letters)) {
      return "disagrees with stack reduction: " + w.to_string();
    }
    Exponent raw = 0;
    for (const auto& l : letters) raw += l.exp < 0 ? -l.exp : l.exp;
    if (w.length() > raw) return "reduction increased length";
    return {};
  });
}

PropertyResult braid_action_homomorphism(std::uint32_t seed, int trials) {
  return run("braid action homomorphism", seed, trials, [](Rng& rng) -> std::string {
    const BraidWord b1 = random_braid(rng, 3, 12);
    const BraidWord b2 = random_braid(rng, 3, 12);
    if (braid_action(b1 * b2) != compose(braid_action(b1), braid_action(b2))) {
      return "action(b1 b2) != action(b1) o action(b2) for " + b1.to_string() + " | " +
             b2.to_string();
    }
    return {};
  });
}

PropertyResult braid_relations_and_inverses(std::uint32_t seed, int trials) {
  return run("braid relation, inverses, boundary product", seed, trials,
             [](Rng& rng) -> std::string {
               const int n = uniform(rng, 3, 5);
               const BraidWord b = random_braid(rng, n, 10);
               const FreeEndo id = FreeEndo::identity(fiber_generators(n));
               if (compose(braid_action(b), braid_action(b.inverse())) != id) {
                 return "action(b) o action(b^-1) != id for " + b.to_string();
               }
               Word product;
               for (Symbol a : fiber_generators(n)) product = product * Word::generator(a);
               if (braid_action(b).apply(product) != product) {
                 return "a1...an not fixed by " + b.to_string();
               }
               const int i = uniform(rng, 1, n - 2);
               const BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
               const BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
               if (braid_action(lhs) != braid_action(rhs)) return "braid relation fails";
               if (n >= 4) {
                 const BraidWord c1(n, {{1, 1}, {3, 1}});
                 const BraidWord c2(n, {{3, 1}, {1, 1}});
                 if (braid_action(c1) != braid_action(c2)) return "far commutation fails";
               }
               return {};
             });
}

PropertyResult cover_lift_functorial(std::uint32_t seed, int trials) {
  return run("cover lift functorial", seed, trials, [](Rng& rng) -> std::string {
    const BraidWord b1 = random_braid(rng, 3, 8);
    const BraidWord b2 = random_braid(rng, 3, 8);
    const FreeEndo m1 = braid_action(b1);
    const FreeEndo m2 = braid_action(b2);
    if (lift_monodromy(compose(m1, m2)) != compose(lift_monodromy(m1), lift_monodromy(m2))) {
      return "lift(m1 o m2) != lift(m1) o lift(m2) for " + b1.to_string() + " | " +
             b2.to_string();
    }
    return {};
  });
}

PropertyResult cover_round_trip(std::uint32_t seed, int trials) {
  return run("cover rewrite round trip", seed, trials, [](Rng& rng) -> std::string {
    const std::vector<Symbol> pq{kernel_p(), kernel_q()};
    const Word w = random_word(rng, pq, 20, 2);
    if (rewrite_to_pq(expand_from_pq(w)) != w) return "pq -> a -> pq changed " + w.to_string();
    // Even-length involution words, built from random letters.
    const auto as = fiber_generators(3);
    std::vector<Letter> letters;
    const int len = 2 * uniform(rng, 0, 10);
    for (int i = 0; i < len; ++i) letters.push_back({as[static_cast<std::size_t>(uniform(rng, 0, 2))], 1});
    const InvolutionWord v = involution_reduce(Word(letters));
    if (involution_reduce(v.to_word()) != v) return "involution_reduce not idempotent";
    if (expand_from_pq(rewrite_to_pq(v)) != v) return "a -> pq -> a changed " + v.to_string();
    return {};
  });
}

PropertyResult fox_product_rule(std::uint32_t seed, int trials) {
  return run("fox product rule", seed, trials, [](Rng& rng) -> std::string {
    Weights w;
    for (Symbol g : abc()) w[g] = uniform(rng, -2, 2);
    const Word u = random_word(rng, abc(), 15, 2);
    const Word v = random_word(rng, abc(), 15, 2);
    for (Symbol g : abc()) {
      const LaurentPoly lhs = fox_derivative(u * v, g, w);
      const LaurentPoly rhs = fox_derivative(u, g, w) + abelian_image(u, w) * fox_derivative(v, g, w);
      if (lhs != rhs) return "product rule fails for " + u.to_string() + " | " + v.to_string();
      if (fox_derivative(u, g, w) != from_map(fox_by_letters(u, g, w))) {
        return "disagrees with letter-by-letter oracle on " + u.to_string();
      }
    }
    return {};
  });
}

PropertyResult fox_fundamental_identity(std::uint32_t seed, int trials) {
  return run("fox fundamental identity", seed, trials, [](Rng& rng) -> std::string {
    Weights w;
    for (Symbol g : abc()) w[g] = uniform(rng, -2, 2);
    const Word u = random_word(rng, abc(), 15, 3);
    LaurentPoly sum;
    for (Symbol g : abc()) {
      sum += fox_derivative(u, g, w) * (LaurentPoly::monomial(w[g]) - LaurentPoly(1));
    }
    if (sum != abelian_image(u, w) - LaurentPoly(1)) return "fails for " + u.to_string();
    return {};
  });
}

PropertyResult smith_certificate(std::uint32_t seed, int trials) {
  return run("smith form certificate", seed, trials, [](Rng& rng) -> std::string {
    const IntMatrix m = random_matrix(rng, 8, 50);
    const SmithForm s = smith_normal_form(m);
    if (!verify_smith_form(m, s)) return "certificate fails for " + m.to_string();
    // The minors oracle is exponential; keep it to small matrices.
    if (m.rows() <= 5 && m.cols() <= 5 && s.diagonal() != invariant_factors_by_minors(m)) {
      return "diagonal disagrees with determinantal divisors for " + m.to_string();
    }
    return {};
  });
}

PropertyResult tietze_preserves_abelianization(std::uint32_t seed, int trials) {
  return run("tietze preserves abelian invariants", seed, trials, [](Rng& rng) -> std::string {
    const int ngens = uniform(rng, 1, 3);
    std::vector<Symbol> gens(abc().begin(), abc().begin() + ngens);
    std::vector<Word> rels;
    const int nrels = uniform(rng, 0, 4);
    for (int i = 0; i < nrels; ++i) rels.push_back(random_word(rng, gens, 6, 3));
    // Sometimes add a defining relator so an elimination happens.
    if (uniform(rng, 0, 1) && ngens > 1) {
      rels.push_back(Word::generator(gens.back()) * random_word(rng, {gens[0]}, 3, 3));
    }
    const Presentation p(gens, rels);
    const std::string want = abelian_invariants(p).to_string();
    std::string bad;
    const Presentation s = tietze_simplify(p, [&](const Presentation& step) {
      if (bad.empty() && abelian_invariants(step).to_string() != want) bad = step.to_string();
    });
    if (!bad.empty()) return "invariants changed at " + bad + " from " + p.to_string();
    if (tietze_simplify(s) != s) return "output not a fixed point: " + s.to_string();
    if (tietze_simplify(p) != s) return "not deterministic for " + p.to_string();
    return {};
  });
}

PropertyResult coset_matches_brute_force(std::uint32_t seed, int trials) {
  return run("todd-coxeter vs brute force", seed, trials, [](Rng& rng) -> std::string {
    const long n = uniform(rng, 2, 12);
    std::vector<long> units;
    for (long s = 1; s < n; ++s) {
      if (std::gcd(s, n) == 1) units.push_back(s);
    }
    const long s = units[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(units.size()) - 1))];
    long ord = 1;
    for (long x = s % n; x != 1 % n; x = x * s % n) ++ord;
    const long m = ord * uniform(rng, 1, 2);
    const Symbol p("p"), g("g");
    const Presentation pres({p, g}, {Word::generator(p, n), Word{{g, -1}, {p, 1}, {g, 1}, {p, -s}}});
    const auto order = quotient_order(pres, {Word::generator(g, m)}, 10000);
    const auto* got = std::get_if<std::size_t>(&order);
    const std::size_t want = metacyclic_order_brute_force(n, s, m);
    const std::string label = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                              " m=" + std::to_string(m);
    if (!got) return "overflow for " + label;
    if (*got != want) {
      return label + ": enumerated " + std::to_string(*got) + ", brute force " + std::to_string(want);
    }
    // Relabelled generators and reversed relators give the same order.
    const Symbol x("x"), y("y");
    const Presentation renamed({y, x}, {Word{{y, -1}, {x, 1}, {y, 1}, {x, -s}}, Word::generator(x, n)});
    const auto again = quotient_order(renamed, {Word::generator(y, m)}, 10000);
    const auto* got2 = std::get_if<std::size_t>(&again);
    if (!got2 || *got2 != want) return label + ": order changed under renaming";
    return {};
  });
}

std::vector<PropertyResult> all_properties(std::uint32_t seed) {
  return {
      free_reduction_idempotent(seed),     braid_action_homomorphism(seed + 1),
      braid_relations_and_inverses(seed + 2), cover_lift_functorial(seed + 3),
      cover_round_trip(seed + 4),          fox_product_rule(seed + 5),
      fox_fundamental_identity(seed + 6),  smith_certificate(seed + 7),
      tietze_preserves_abelianization(seed + 8), coset_matches_brute_force(seed + 9),
  };
}

}  // namespace zvk::testing
