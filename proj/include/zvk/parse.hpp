#pragma once

// Text grammars. Errors are ParseError with 1-based line and column.
//
//   word          p q^-1 p^3         "1" is the identity
//   braid         s1 s2^-1 s1^3
//   presentation  gens: p, q, g+; rels: p^9, g+^-1 p g+ p^-4
//   polynomial    y^3 + y^2 + x^2 - 4/27   ("eps" is the cube root of unity;
//                 division only by constants)
//   weights       g=1,p=0
//   zvk input     one entry per line: "kept: <braid>" or "removed <name>: <braid>"
//
// Generator names match [A-Za-z][A-Za-z0-9_]*[+-]?. Blank lines and lines
// starting with '#' are ignored in multi-line inputs.

#include <string_view>
#include <utility>
#include <vector>

#include "zvk/alexander.hpp"
#include "zvk/multipoly.hpp"
#include "zvk/presentation.hpp"
#include "zvk/words.hpp"

namespace zvk {

/// Any generator names are accepted.
Word parse_word(std::string_view text);
/// Names outside gens are rejected.
Word parse_word(std::string_view text, const std::vector<Symbol>& gens);
/// Comma-separated words over gens.
std::vector<Word> parse_word_list(std::string_view text, const std::vector<Symbol>& gens);

/// strands = 0 infers max index + 1 (at least 2).
BraidWord parse_braid(std::string_view text, int strands = 0);

Presentation parse_presentation(std::string_view text);

MultiPoly parse_polynomial(std::string_view text);

Weights parse_weights(std::string_view text, const std::vector<Symbol>& gens);

struct ZvkInput {
  std::vector<BraidWord> kept;
  std::vector<std::pair<Symbol, BraidWord>> removed;
};

ZvkInput parse_zvk_input(std::string_view text);

}  // namespace zvk
