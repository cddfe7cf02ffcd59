#pragma once

// Todd-Coxeter coset enumeration, HLT strategy with immediate coincidence
// processing.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "zvk/presentation.hpp"

namespace zvk {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Closed coset table. Coset 0 is the subgroup itself. Column 2k is the
/// action of generator k, column 2k+1 the action of its inverse.
class CosetTable {
 public:
  CosetTable(std::vector<Symbol> generators, std::vector<std::vector<std::uint32_t>> rows);

  std::size_t cosets() const noexcept { return rows_.size(); }
  const std::vector<Symbol>& generators() const noexcept { return generators_; }

  /// Coset reached from `coset` by g^sign.
  std::uint32_t act(std::size_t coset, Symbol g, int sign) const;
  /// Coset reached from `coset` by the word w.
  std::uint32_t act(std::size_t coset, const Word& w) const;

 private:
  std::vector<Symbol> generators_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// The enumeration needed more than `max_cosets` coset definitions. The
/// index is undetermined, not known to be infinite.
struct CosetOverflow {
  std::size_t max_cosets;
};

using CosetResult = std::variant<CosetTable, CosetOverflow>;

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by p. Deterministic. Throws if a subgroup word uses an
/// unknown generator.
CosetResult enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                             std::size_t max_cosets = kDefaultMaxCosets);

/// Full consistency check: g and g^-1 act as inverse permutations, every
/// relator fixes every coset, every subgroup word fixes coset 0.
bool verify_coset_table(const CosetTable& t, const Presentation& p,
                        const std::vector<Word>& subgroup);

/// Order of the group P / <<extra>>, enumerated over the trivial subgroup.
std::variant<std::size_t, CosetOverflow> quotient_order(
    const Presentation& p, const std::vector<Word>& extra,
    std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace zvk
