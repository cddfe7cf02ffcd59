#include "zvk/alexander.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "zvk/error.hpp"

namespace zvk {

WeightedPresentation::WeightedPresentation(Presentation p, Weights w)
    : presentation(std::move(p)), weights(std::move(w)) {
  for (Symbol g : presentation.generators()) {
    if (!weights.contains(g)) throw Error("no weight for generator " + g.name());
  }
}

WeightedPresentation WeightedPresentation::uniform(Presentation p) {
  Weights w;
  for (Symbol g : p.generators()) w.emplace(g, 1);
  return {std::move(p), std::move(w)};
}

std::int64_t WeightedPresentation::weight(const Word& w) const {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) {
    total = add_exponents(total, mul_exponents(l.exp, weights.at(l.gen)));
  }
  return total;
}

bool WeightedPresentation::balanced() const {
  const auto& rels = presentation.relators();
  return std::all_of(rels.begin(), rels.end(), [this](const Word& r) { return weight(r) == 0; });
}

namespace {

std::int64_t weight_of(const Weights& weights, Symbol g) {
  const auto it = weights.find(g);
  if (it == weights.end()) throw Error("no weight for generator " + g.name());
  return it->second;
}

}  // namespace

LaurentPoly abelian_image(const Word& w, const Weights& weights) {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) {
    total = add_exponents(total, mul_exponents(l.exp, weight_of(weights, l.gen)));
  }
  return LaurentPoly::monomial(total);
}

LaurentPoly fox_derivative(const Word& w, Symbol g, const Weights& weights) {
  // d(u x^e)/dg = du/dg + phi(u) d(x^e)/dg, and for x = g with weight c:
  //   e > 0: t^0 + t^c + ... + t^((e-1)c)
  //   e < 0: -(t^-c + t^-2c + ... + t^(ec))
  LaurentPoly result;
  std::int64_t prefix = 0;
  for (const auto& l : w.letters()) {
    const std::int64_t c = weight_of(weights, l.gen);
    if (l.gen == g) {
      if (l.exp > 0) {
        for (Exponent i = 0; i < l.exp; ++i) {
          result += LaurentPoly::monomial(prefix + mul_exponents(i, c));
        }
      } else {
        for (Exponent i = 1; i <= -l.exp; ++i) {
          result -= LaurentPoly::monomial(prefix - mul_exponents(i, c));
        }
      }
    }
    prefix = add_exponents(prefix, mul_exponents(l.exp, c));
  }
  return result;
}

LaurentMatrix alexander_matrix(const WeightedPresentation& wp, const AlexanderOptions& options) {
  if (options.require_balanced && !wp.balanced()) {
    throw Error("alexander_matrix: relator with nonzero total weight");
  }
  const auto& gens = wp.presentation.generators();
  LaurentMatrix m;
  for (const auto& r : wp.presentation.relators()) {
    std::vector<LaurentPoly> row;
    row.reserve(gens.size());
    for (Symbol g : gens) row.push_back(fox_derivative(r, g, wp.weights));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

LaurentPoly minor(const LaurentMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  std::vector<std::vector<LaurentPoly>> sub(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sub[i].reserve(cols.size());
    for (std::size_t c : cols) sub[i].push_back(m[rows[i]][c]);
  }
  return determinant(std::move(sub));
}

}  // namespace

LaurentPoly minors_gcd(const LaurentMatrix& m, std::size_t k, Execution exec) {
  if (k == 0) return 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const auto row_sets = subsets(rows, k);
  const auto col_sets = subsets(cols, k);
  const std::size_t total = row_sets.size() * col_sets.size();
  if (total == 0) return {};

  const auto minor_at = [&](std::size_t idx) {
    return minor(m, row_sets[idx / col_sets.size()], col_sets[idx % col_sets.size()]);
  };

  if (exec == Execution::Serial) {
    LaurentPoly g;
    for (std::size_t idx = 0; idx < total; ++idx) {
      g = gcd(g, minor_at(idx));
      if (g == LaurentPoly(1)) break;
    }
    return g.normalized();
  }

  // Each thread folds its share of minors into a partial gcd; the partial
  // results are combined in thread order.
  std::vector<LaurentPoly> partial;
  std::exception_ptr failure;
#pragma omp parallel
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
    LaurentPoly local;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
      if (local == LaurentPoly(1)) continue;
      try {
        local = gcd(local, minor_at(static_cast<std::size_t>(idx)));
      } catch (...) {
#pragma omp critical(zvk_minor_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  if (failure) std::rethrow_exception(failure);
  LaurentPoly g;
  for (const auto& p : partial) g = gcd(g, p);
  return g.normalized();
}

LaurentPoly alexander_polynomial(const WeightedPresentation& wp,
                                 const AlexanderOptions& options) {
  const std::size_t n = wp.presentation.generators().size();
  if (n <= 1) return 1;
  return minors_gcd(alexander_matrix(wp, options), n - 1, options.execution);
}

}  // namespace zvk
