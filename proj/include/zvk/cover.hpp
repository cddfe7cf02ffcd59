#pragma once

// The double-cover lift. The fiber group F(a1,a2,a3) modulo a_i^2 = 1 is
// the free product of three Z/2's; the kernel of the map a_i -> 1 in Z/2 is
// free on p = a1 a2 and q = a3 a2. Braid monodromies on the fiber lift to
// endomorphisms of F(p, q).

#include <string>
#include <vector>

#include "zvk/symbol.hpp"
#include "zvk/words.hpp"

namespace zvk {

/// Word in a1, a2, a3 with a_i^2 = 1 applied exhaustively: no two equal
/// adjacent letters, exponents implicitly 1.
class InvolutionWord {
 public:
  InvolutionWord() = default;

  const std::vector<Symbol>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  /// Image under a_i -> 1 in Z/2: the length mod 2.
  int grade() const noexcept { return static_cast<int>(letters_.size() % 2); }
  /// The same element as an ordinary word in F(a1, a2, a3).
  Word to_word() const;
  std::string to_string() const;

  friend bool operator==(const InvolutionWord&, const InvolutionWord&) = default;

 private:
  friend InvolutionWord involution_reduce(const Word& w);
  std::vector<Symbol> letters_;
};

/// Folds exponents mod 2 and cancels equal neighbours. Throws on a
/// generator other than a1, a2, a3.
InvolutionWord involution_reduce(const Word& w);

int grade(const InvolutionWord& w);

/// Generators of the kernel.
Symbol kernel_p();
Symbol kernel_q();

/// Rewrites an even-length normal form in p, q via the pair table
/// a1a2 -> p, a2a1 -> p^-1, a3a2 -> q, a2a3 -> q^-1, a1a3 -> p q^-1,
/// a3a1 -> q p^-1. Throws if the word has odd grade.
Word rewrite_to_pq(const InvolutionWord& w);

/// Inverse of rewrite_to_pq: p -> a1 a2, q -> a3 a2, then involution
/// reduction.
InvolutionWord expand_from_pq(const Word& w);

/// Lift of a braid monodromy on F(a1,a2,a3) to F(p,q). Throws if an image
/// escapes the kernel, which can only happen for a non-braid endomorphism.
FreeEndo lift_monodromy(const FreeEndo& m);

}  // namespace zvk
