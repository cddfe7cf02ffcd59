#pragma once

// Fox free differential calculus and the Alexander polynomial of a
// presentation with a map to the infinite cyclic group <t>.

#include <cstdint>
#include <map>
#include <vector>

#include "zvk/execution.hpp"
#include "zvk/laurent.hpp"
#include "zvk/presentation.hpp"

namespace zvk {

/// Generator g maps to t^weights[g].
using Weights = std::map<Symbol, std::int64_t>;

/// A presentation together with weights on its generators.
struct WeightedPresentation {
  Presentation presentation;
  Weights weights;

  /// Throws unless every generator has a weight.
  WeightedPresentation(Presentation p, Weights w);

  /// Every generator mapped to t.
  static WeightedPresentation uniform(Presentation p);

  /// Total weight of the relator; the map to <t> is well defined iff this
  /// is zero for every relator.
  std::int64_t weight(const Word& w) const;
  bool balanced() const;
};

/// phi(d w / d g). Throws if w uses a generator without a weight.
LaurentPoly fox_derivative(const Word& w, Symbol g, const Weights& weights);

/// phi(w) = t^(total weight).
LaurentPoly abelian_image(const Word& w, const Weights& weights);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

struct AlexanderOptions {
  /// Reject presentations whose relators have nonzero total weight. Off by
  /// default: curve-complement groups such as B3/(s1 s2)^3 are used with
  /// all generators mapped to t even though their relators are unbalanced.
  bool require_balanced = false;
  Execution execution = Execution::Parallel;
};

/// Entry (i, j) = phi(d r_i / d g_j).
LaurentMatrix alexander_matrix(const WeightedPresentation& wp,
                               const AlexanderOptions& options = {});

/// gcd of all (n-1)x(n-1) minors of the Alexander matrix, normalized by a
/// unit +-t^k (lowest exponent 0, positive constant term). One generator
/// gives the trivial polynomial 1; fewer than n-1 relators give 0.
LaurentPoly alexander_polynomial(const WeightedPresentation& wp,
                                 const AlexanderOptions& options = {});

/// gcd of all k x k minors of a matrix, normalized. The minors are
/// enumerated serially or with OpenMP.
LaurentPoly minors_gcd(const LaurentMatrix& m, std::size_t k, Execution exec);

}  // namespace zvk
