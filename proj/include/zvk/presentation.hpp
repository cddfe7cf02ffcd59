#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zvk/execution.hpp"
#include "zvk/symbol.hpp"
#include "zvk/words.hpp"

namespace zvk {

/// Finite presentation <generators | relators>. Relators are freely reduced
/// and nonempty; trivial relators are dropped on construction.
class Presentation {
 public:
  Presentation() = default;
  /// Throws on duplicate generators or relators that use unknown generators.
  Presentation(std::vector<Symbol> generators, std::vector<Word> relators);

  const std::vector<Symbol>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  bool has_generator(Symbol g) const;
  /// Position of g in the generator list; throws if absent.
  std::size_t index_of(Symbol g) const;

  /// `gens: p, q; rels: p^9, q p q^-1`
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<Symbol> generators_;
  std::vector<Word> relators_;
};

/// Zariski-van Kampen assembly over the fiber group F(p, q). A kept fiber m
/// contributes x^-1 m(x); a removed fiber (g, m) contributes the new
/// generator g and g^-1 x g m(x)^-1, for x in {p, q}.
Presentation zvk_assemble(const std::vector<FreeEndo>& kept,
                          const std::vector<std::pair<Symbol, FreeEndo>>& removed);

/// Canonical representative of the cyclic word r up to rotation and
/// inversion, with letters ordered by the generator order of `gens`.
Word canonical_relator(const Word& r, const std::vector<Symbol>& gens);

/// Cyclically reduces every relator, replaces it by its canonical
/// representative, removes duplicates, and sorts by (length, letters).
/// Same group, no generator eliminated.
Presentation normalize_relators(const Presentation& p);

/// Called with every intermediate presentation of tietze_simplify.
using TietzeObserver = std::function<void(const Presentation&)>;

/// Deterministic Tietze normalizer. Repeats until nothing changes:
///  - eliminate a generator that occurs exactly once, with exponent +-1, in
///    some relator (shortest relator first, later generators first);
///  - drop duplicate relators, merge powers of a single generator into
///    their gcd, and drop relators that follow from a recognised
///    metacyclic core <x, y | x^n, y^-1 x y x^-s>;
///  - normalize_relators.
/// The output is Tietze-equivalent to the input and is a fixed point. This
/// is a normalizer, not an isomorphism test.
Presentation tietze_simplify(const Presentation& p, const TietzeObserver& observer = {});

/// Eliminates g using relator r, which must contain g exactly once with
/// exponent +-1. The relator is removed and g is substituted everywhere.
Presentation eliminate_generator(const Presentation& p, Symbol g, const Word& r);

/// Adds the relator g2 g1 p^-k (i.e. g2 g1 = p^k), eliminates g2 through
/// it, and simplifies. Throws if g1, g2 or p is not a generator.
Presentation patch_fiber(const Presentation& p, Symbol g1, Symbol g2, Exponent k,
                         Symbol fiber = Symbol("p"));

/// patch_fiber for every k in `ks`; results are in the order of `ks`.
std::vector<Presentation> patch_sweep(const Presentation& p, Symbol g1, Symbol g2,
                                      const std::vector<Exponent>& ks,
                                      Execution exec = Execution::Parallel,
                                      Symbol fiber = Symbol("p"));

}  // namespace zvk
