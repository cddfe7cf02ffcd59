#pragma once

// Metacyclic groups <p, g | p^n, g^-1 p g p^-s> with gcd(s, n) = 1, their
// normal form p^a g^b, and homomorphisms into small finite groups.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zvk/presentation.hpp"
#include "zvk/symbol.hpp"
#include "zvk/words.hpp"

namespace zvk {

class MetacyclicForm {
 public:
  /// Throws unless n > 0 and gcd(s, n) = 1. s is stored mod n.
  MetacyclicForm(Exponent n, Exponent s);

  Exponent n() const noexcept { return n_; }
  Exponent s() const noexcept { return s_; }
  /// s^-1 mod n.
  Exponent s_inverse() const noexcept { return s_inv_; }
  /// s^k mod n for any integer k.
  Exponent s_power(Exponent k) const;

  Presentation presentation(Symbol p, Symbol g) const;

 private:
  Exponent n_;
  Exponent s_;
  Exponent s_inv_;
};

/// p^a g^b with 0 <= a < n.
struct MetacyclicElement {
  Exponent a = 0;
  Exponent b = 0;

  friend bool operator==(const MetacyclicElement&, const MetacyclicElement&) = default;
};

/// Normal form by the rewriting g^-1 p^e g -> p^(s e), g p^e g^-1 -> p^(s^-1 e).
/// Throws on a generator other than p and g.
MetacyclicElement metacyclic_normal_form(const MetacyclicForm& m, const Word& w, Symbol p,
                                         Symbol g);

/// Product in Z_n x| Z: (a, b)(c, d) = (a + s^-b c, b + d).
MetacyclicElement multiply(const MetacyclicForm& m, MetacyclicElement x, MetacyclicElement y);

/// A metacyclic core found inside a two-generator presentation.
struct MetacyclicCore {
  MetacyclicForm form;
  Symbol p;
  Symbol g;
  /// Indices of the relators p^n and the conjugation relator.
  std::size_t power_relator;
  std::size_t conjugation_relator;
};

/// Looks for relators p^n and (a rotation or inverse of) g^-1 p g p^-s with
/// gcd(s, n) = 1 among the relators of a two-generator presentation.
/// Prefers the shortest conjugation relator.
std::optional<MetacyclicCore> find_metacyclic_core(const Presentation& p);

/// Finite group given by a multiplication oracle on elements 0..order-1.
struct FiniteGroup {
  std::size_t order;
  std::size_t identity;
  std::function<std::size_t(std::size_t, std::size_t)> multiply;
  std::function<std::size_t(std::size_t)> inverse;
};

/// Z/n under addition; element k is the residue k.
FiniteGroup cyclic_group(std::size_t n);

/// Z_n x| Z_m with the generator of Z_m acting by multiplication by s.
/// Element a + n*b stands for (a, b) = p^a g^b. Requires s^m = 1 mod n.
FiniteGroup semidirect_product(std::size_t n, std::size_t m, Exponent s);

std::size_t element_order(const FiniteGroup& group, std::size_t x);

/// Evaluates a word under the generator images.
std::size_t evaluate(const FiniteGroup& group, const std::map<Symbol, std::size_t>& images,
                     const Word& w);

/// True iff every relator of P maps to the identity. Throws if a generator
/// has no image.
bool verify_homomorphism(const Presentation& p, const std::map<Symbol, std::size_t>& images,
                         const FiniteGroup& target);

struct CommutantReport {
  /// p^d with d = gcd(s - 1, n), reduced mod n (identity when d = n).
  Word generator;
  Exponent order;
  bool central;
  /// The image of the generator in Z_n x| <s> has exactly `order` elements
  /// and the map from the presentation was verified to be a homomorphism.
  bool order_certified;
};

CommutantReport commutant_report(const MetacyclicForm& m, Symbol p = Symbol("p"),
                                 Symbol g = Symbol("g+"));

/// Multiplicative order of s modulo n.
Exponent multiplicative_order(Exponent s, Exponent n);

}  // namespace zvk
