#pragma once

// Free-group words, endomorphisms of free groups, and the Artin action of
// braids on a free group.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zvk/symbol.hpp"

namespace zvk {

using Exponent = std::int64_t;

/// One syllable g^k of a word; k is never zero inside a reduced word.
struct Letter {
  Symbol gen;
  Exponent exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word. Adjacent letters never share a generator; the empty
/// word is the identity. Every constructor reduces its input.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator(Symbol g, Exponent e = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Number of syllables.
  std::size_t syllables() const noexcept { return letters_.size(); }
  /// Number of letters counted with multiplicity (sum of |exponent|).
  Exponent length() const;

  Word inverse() const;
  Word pow(Exponent k) const;
  /// Sum of the exponents of g.
  Exponent exponent_sum(Symbol g) const;
  bool uses(Symbol g) const;

  /// Cyclic reduction: the cyclically reduced core of the word.
  Word cyclically_reduced() const;
  /// Rotation that starts at syllable i (word must be cyclically reduced).
  Word rotated(std::size_t i) const;

  /// Text form in the word grammar; the identity prints as "1".
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence (exponents may be zero).
Word reduce(std::span<const Letter> letters);

/// Checked exponent arithmetic; throws zvk::Error on overflow.
Exponent add_exponents(Exponent a, Exponent b);
Exponent mul_exponents(Exponent a, Exponent b);

/// Endomorphism of the free group on `domain`, given by generator images.
class FreeEndo {
 public:
  /// Throws if the image count differs from the domain size, if the domain
  /// has duplicates, or if an image uses a generator outside the domain.
  FreeEndo(std::vector<Symbol> domain, std::vector<Word> images);

  static FreeEndo identity(std::vector<Symbol> domain);

  const std::vector<Symbol>& domain() const noexcept { return domain_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(Symbol g) const;

  /// Letterwise substitution followed by reduction; throws on a generator
  /// outside the domain.
  Word apply(const Word& w) const;

  /// True only if a two-sided inverse was verified by mark_automorphism.
  bool is_automorphism() const noexcept { return automorphism_; }

  std::string to_string() const;

  /// Equality of images; the automorphism flag is not compared.
  friend bool operator==(const FreeEndo& a, const FreeEndo& b) {
    return a.domain_ == b.domain_ && a.images_ == b.images_;
  }

 private:
  friend FreeEndo mark_automorphism(FreeEndo e, const FreeEndo& inverse);

  std::vector<Symbol> domain_;
  std::vector<Word> images_;
  bool automorphism_ = false;
};

/// (compose(outer, inner))(w) == outer(inner(w)). Throws on domain mismatch.
FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner);

/// True iff a∘b and b∘a are both the identity.
bool are_inverse(const FreeEndo& a, const FreeEndo& b);

/// Returns e flagged as an automorphism; throws if `inverse` is not a
/// two-sided inverse of e.
FreeEndo mark_automorphism(FreeEndo e, const FreeEndo& inverse);

/// Artin generator sigma_index^sign, 1 <= index < strands, sign = +-1.
struct BraidLetter {
  int index;
  int sign;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// Braid word on a fixed number of strands, stored as given.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }

  BraidWord inverse() const;
  /// Same letters on more strands; n must not be smaller than strands().
  BraidWord with_strands(int n) const;
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Generator convention for the action of sigma_i on F(a1..an).
enum class BraidConvention {
  /// a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i.
  Standard,
  /// a_i -> a_{i+1}, a_{i+1} -> a_{i+1}^-1 a_i a_{i+1}. Kept as a negative
  /// control; it does not reproduce the lifted monodromy formulas.
  Flipped,
};

/// The fiber generators a1..an.
std::vector<Symbol> fiber_generators(int n);

/// Left action of b on F(a1..an): action(b1 b2) = action(b1) o action(b2).
/// The result is flagged as an automorphism (inverse verified).
FreeEndo braid_action(const BraidWord& b,
                      BraidConvention convention = BraidConvention::Standard);

}  // namespace zvk
