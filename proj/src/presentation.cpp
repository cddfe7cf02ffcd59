#include "zvk/presentation.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <tuple>

#include "zvk/cover.hpp"
#include "zvk/error.hpp"
#include "zvk/metacyclic.hpp"

namespace zvk {

Presentation::Presentation(std::vector<Symbol> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] == generators_[j]) {
        throw Error("duplicate generator: " + generators_[i].name());
      }
    }
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (!has_generator(l.gen)) throw Error("relator uses unknown generator " + l.gen.name());
    }
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

bool Presentation::has_generator(Symbol g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

std::size_t Presentation::index_of(Symbol g) const {
  const auto it = std::find(generators_.begin(), generators_.end(), g);
  if (it == generators_.end()) throw Error("unknown generator: " + g.name());
  return static_cast<std::size_t>(it - generators_.begin());
}

std::string Presentation::to_string() const {
  std::string s = "gens:";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    s += (i ? ", " : " ") + generators_[i].name();
  }
  s += "; rels:";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    s += (i ? ", " : " ") + relators_[i].to_string();
  }
  return s;
}

// ------------------------------------------------------------- assembly

Presentation zvk_assemble(const std::vector<FreeEndo>& kept,
                          const std::vector<std::pair<Symbol, FreeEndo>>& removed) {
  const Symbol p = kernel_p();
  const Symbol q = kernel_q();
  const std::vector<Symbol> fiber{p, q};

  std::vector<Symbol> gens = fiber;
  std::vector<Word> rels;
  for (const auto& m : kept) {
    if (m.domain() != fiber) throw Error("zvk_assemble: monodromy must act on F(p, q)");
    for (Symbol x : fiber) rels.push_back(Word::generator(x, -1) * m.image(x));
  }
  for (const auto& [g, m] : removed) {
    if (m.domain() != fiber) throw Error("zvk_assemble: monodromy must act on F(p, q)");
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
      throw Error("zvk_assemble: generator name collision: " + g.name());
    }
    gens.push_back(g);
    for (Symbol x : fiber) {
      rels.push_back(Word{{g, -1}, {x, 1}, {g, 1}} * m.image(x).inverse());
    }
  }
  return Presentation(std::move(gens), std::move(rels));
}

// ------------------------------------------------------ canonical forms

namespace {

using LetterKey = std::tuple<std::size_t, int, Exponent>;

struct RelatorOrder {
  std::map<Symbol, std::size_t> index;

  explicit RelatorOrder(const std::vector<Symbol>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) index.emplace(gens[i], i);
  }

  LetterKey key(const Letter& l) const {
    return {index.at(l.gen), l.exp < 0 ? 1 : 0, l.exp < 0 ? -l.exp : l.exp};
  }

  bool letters_less(const Word& a, const Word& b) const {
    const auto la = a.letters();
    const auto lb = b.letters();
    return std::lexicographical_compare(
        la.begin(), la.end(), lb.begin(), lb.end(),
        [this](const Letter& x, const Letter& y) { return key(x) < key(y); });
  }

  bool operator()(const Word& a, const Word& b) const {
    const Exponent na = a.length();
    const Exponent nb = b.length();
    if (na != nb) return na < nb;
    return letters_less(a, b);
  }
};

Word canonical_with(const Word& r, const RelatorOrder& order) {
  const Word core = r.cyclically_reduced();
  if (core.syllables() <= 1) {
    // A single syllable x^k: prefer the positive power.
    if (core.empty()) return core;
    const Letter l = core.letters()[0];
    return Word::generator(l.gen, l.exp < 0 ? -l.exp : l.exp);
  }
  Word best = core;
  for (const Word& candidate : {core, core.inverse()}) {
    for (std::size_t i = 0; i < candidate.syllables(); ++i) {
      Word w = candidate.rotated(i);
      if (order.letters_less(w, best)) best = std::move(w);
    }
  }
  return best;
}

Presentation normalize_with(const std::vector<Symbol>& gens, std::vector<Word> rels) {
  const RelatorOrder order(gens);
  std::vector<Word> out;
  out.reserve(rels.size());
  for (const auto& r : rels) {
    Word c = canonical_with(r, order);
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Presentation(gens, std::move(out));
}

// The syllable index of g in r if g occurs in exactly one syllable, with
// exponent +-1.
std::optional<std::size_t> single_occurrence(const Word& r, Symbol g) {
  std::optional<std::size_t> at;
  const auto l = r.letters();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].gen != g) continue;
    if (at || (l[i].exp != 1 && l[i].exp != -1)) return std::nullopt;
    at = i;
  }
  return at;
}

// Merges single-syllable relators x^a, x^b into x^gcd(a, b) and drops
// relators that are consequences of a metacyclic core.
Presentation drop_redundant(const Presentation& p) {
  std::vector<Word> rels;
  std::map<Symbol, Exponent> powers;
  for (const auto& r : p.relators()) {
    if (r.syllables() == 1) {
      const Letter l = r.letters()[0];
      const Exponent e = l.exp < 0 ? -l.exp : l.exp;
      auto [it, fresh] = powers.emplace(l.gen, e);
      if (!fresh) it->second = std::gcd(it->second, e);
    } else {
      rels.push_back(r);
    }
  }
  for (const auto& [g, e] : powers) rels.push_back(Word::generator(g, e));
  Presentation merged = normalize_with(p.generators(), std::move(rels));

  const auto core = find_metacyclic_core(merged);
  if (!core) return merged;
  std::vector<Word> kept;
  const auto& all = merged.relators();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i != core->power_relator && i != core->conjugation_relator &&
        metacyclic_normal_form(core->form, all[i], core->p, core->g) == MetacyclicElement{}) {
      continue;
    }
    kept.push_back(all[i]);
  }
  return normalize_with(merged.generators(), std::move(kept));
}

}  // namespace

Word canonical_relator(const Word& r, const std::vector<Symbol>& gens) {
  return canonical_with(r, RelatorOrder(gens));
}

Presentation normalize_relators(const Presentation& p) {
  return normalize_with(p.generators(), p.relators());
}

// --------------------------------------------------------------- Tietze

Presentation eliminate_generator(const Presentation& p, Symbol g, const Word& r) {
  const auto& rels = p.relators();
  const auto it = std::find(rels.begin(), rels.end(), r);
  if (it == rels.end()) throw Error("eliminate_generator: relator not in presentation");
  const Word core = r.cyclically_reduced();
  const auto at = single_occurrence(core, g);
  if (!at) {
    throw Error("eliminate_generator: " + g.name() + " must occur once with exponent +-1");
  }
  // core rotated to g^e u; g = u^-1 when e = 1, g = u when e = -1.
  const Word rotated = core.rotated(*at);
  const auto letters = rotated.letters();
  const Word rest(letters.subspan(1));
  const Word value = letters[0].exp == 1 ? rest.inverse() : rest;

  std::vector<Symbol> gens;
  std::vector<Word> images;
  for (Symbol x : p.generators()) {
    gens.push_back(x);
    images.push_back(x == g ? value : Word::generator(x));
  }
  // Substitution lands in the smaller free group, which is a subset of the
  // domain, so a FreeEndo of the original generators expresses it.
  const FreeEndo substitute(gens, std::move(images));

  std::vector<Word> out;
  bool skipped = false;
  for (const auto& w : rels) {
    if (!skipped && w == r) {
      skipped = true;
      continue;
    }
    out.push_back(substitute.apply(w));
  }
  gens.erase(std::find(gens.begin(), gens.end(), g));
  return Presentation(std::move(gens), std::move(out));
}

Presentation tietze_simplify(const Presentation& p, const TietzeObserver& observer) {
  const auto observe = [&observer](const Presentation& x) {
    if (observer) observer(x);
  };
  Presentation cur = normalize_relators(p);
  observe(cur);
  for (;;) {
    bool eliminated = false;
    // Relators are sorted shortest first; later generators go first.
    for (const auto& r : cur.relators()) {
      const auto& gens = cur.generators();
      for (auto g = gens.rbegin(); g != gens.rend(); ++g) {
        if (single_occurrence(r, *g)) {
          cur = normalize_relators(eliminate_generator(cur, *g, r));
          eliminated = true;
          break;
        }
      }
      if (eliminated) break;
    }
    if (eliminated) {
      observe(cur);
      continue;
    }
    Presentation next = drop_redundant(cur);
    if (next == cur) break;
    cur = std::move(next);
    observe(cur);
  }
  return cur;
}

// -------------------------------------------------------------- patching

Presentation patch_fiber(const Presentation& p, Symbol g1, Symbol g2, Exponent k,
                         Symbol fiber) {
  for (Symbol s : {g1, g2}) {
    if (!p.has_generator(s)) throw Error("patch_fiber: unknown generator " + s.name());
  }
  if (g1 == g2) throw Error("patch_fiber: g1 and g2 must differ");
  if (k != 0 && !p.has_generator(fiber)) {
    throw Error("patch_fiber: unknown fiber generator " + fiber.name());
  }
  const Word patch = Word{{g2, 1}, {g1, 1}} * Word::generator(fiber, -k);
  std::vector<Word> rels = p.relators();
  rels.push_back(patch);
  const Presentation with_patch(p.generators(), std::move(rels));
  return tietze_simplify(eliminate_generator(with_patch, g2, patch));
}

std::vector<Presentation> patch_sweep(const Presentation& p, Symbol g1, Symbol g2,
                                      const std::vector<Exponent>& ks, Execution exec,
                                      Symbol fiber) {
  std::vector<Presentation> out(ks.size());
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] = patch_fiber(p, g1, g2, ks[i], fiber);
    return out;
  }
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(ks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const auto u = static_cast<std::size_t>(i);
      out[u] = patch_fiber(p, g1, g2, ks[u], fiber);
    } catch (...) {
#pragma omp critical(zvk_patch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace zvk
