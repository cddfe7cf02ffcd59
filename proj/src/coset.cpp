#include "zvk/coset.hpp"

#include <algorithm>
#include <stdexcept>

#include "zvk/error.hpp"

namespace zvk {

CosetTable::CosetTable(std::vector<Symbol> generators,
                       std::vector<std::vector<std::uint32_t>> rows)
    : generators_(std::move(generators)), rows_(std::move(rows)) {}

std::uint32_t CosetTable::act(std::size_t coset, Symbol g, int sign) const {
  const auto it = std::find(generators_.begin(), generators_.end(), g);
  if (it == generators_.end()) throw Error("coset table: unknown generator " + g.name());
  const auto col = 2 * static_cast<std::size_t>(it - generators_.begin()) + (sign < 0 ? 1 : 0);
  return rows_.at(coset)[col];
}

std::uint32_t CosetTable::act(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::uint32_t>(coset);
  for (const auto& l : w.letters()) {
    const int sign = l.exp > 0 ? 1 : -1;
    for (Exponent k = 0; k < (l.exp > 0 ? l.exp : -l.exp); ++k) c = act(c, l.gen, sign);
  }
  return c;
}

namespace {

using Column = std::size_t;
constexpr std::int32_t kUndefined = -1;

struct OverflowSignal {};

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::size_t max_cosets)
      : columns_(columns), max_cosets_(max_cosets) {
    new_coset();
  }

  std::size_t defined() const { return parent_.size(); }
  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  void scan_and_fill(std::int32_t c, const std::vector<Column>& w) {
    if (w.empty()) return;
    std::int32_t f = c;
    std::int32_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, letter(w, i)) != kUndefined) f = at(f, letter(w, i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, letter(w, j) ^ 1) != kUndefined) b = at(b, letter(w, j--) ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // Deduction: the gap is a single letter.
        at(f, letter(w, i)) = b;
        at(b, letter(w, i) ^ 1) = f;
        return;
      }
      define(f, letter(w, i));
    }
  }

  void fill_row(std::int32_t c) {
    for (Column x = 0; x < columns_; ++x) {
      if (!alive(c)) return;
      if (at(c, x) == kUndefined) define(c, x);
    }
  }

  std::vector<std::vector<std::uint32_t>> compact() const {
    std::vector<std::int32_t> renumber(parent_.size(), kUndefined);
    std::uint32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(static_cast<std::int32_t>(c))) renumber[c] = static_cast<std::int32_t>(next++);
    }
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(next);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      std::vector<std::uint32_t> row(columns_);
      for (Column x = 0; x < columns_; ++x) {
        const std::int32_t d = at(static_cast<std::int32_t>(c), x);
        if (d == kUndefined) throw std::logic_error("coset table left incomplete");
        row[x] = static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(rep(d))]);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  static Column letter(const std::vector<Column>& w, std::ptrdiff_t i) {
    return w[static_cast<std::size_t>(i)];
  }

  std::int32_t& at(std::int32_t c, Column x) {
    return table_[static_cast<std::size_t>(c) * columns_ + x];
  }
  std::int32_t at(std::int32_t c, Column x) const {
    return table_[static_cast<std::size_t>(c) * columns_ + x];
  }

  std::int32_t new_coset() {
    if (parent_.size() >= max_cosets_) throw OverflowSignal{};
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    return c;
  }

  void define(std::int32_t c, Column x) {
    const std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  std::int32_t rep(std::int32_t c) const {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    return r;
  }

  std::int32_t rep_compress(std::int32_t c) {
    const std::int32_t r = rep(c);
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    const std::int32_t ra = rep_compress(a);
    const std::int32_t rb = rep_compress(b);
    if (ra == rb) return;
    const std::int32_t lo = std::min(ra, rb);
    const std::int32_t hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t dead = queue_[i];
      for (Column x = 0; x < columns_; ++x) {
        const std::int32_t d = at(dead, x);
        if (d == kUndefined) continue;
        at(d, x ^ 1) = kUndefined;
        const std::int32_t mu = rep_compress(dead);
        const std::int32_t nu = rep_compress(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) != kUndefined) {
          merge(mu, at(nu, x ^ 1));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
};

std::vector<Column> to_columns(const Presentation& p, const Word& w) {
  std::vector<Column> cols;
  for (const auto& l : w.letters()) {
    if (!p.has_generator(l.gen)) throw Error("coset enumeration: unknown generator " + l.gen.name());
    const Column c = 2 * p.index_of(l.gen) + (l.exp < 0 ? 1 : 0);
    cols.insert(cols.end(), static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp), c);
  }
  return cols;
}

}  // namespace

CosetResult enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                             std::size_t max_cosets) {
  std::vector<std::vector<Column>> rels;
  for (const auto& r : p.relators()) rels.push_back(to_columns(p, r));
  std::vector<std::vector<Column>> gens;
  for (const auto& w : subgroup) gens.push_back(to_columns(p, w));

  try {
    Enumerator e(2 * p.generators().size(), max_cosets);
    for (const auto& w : gens) e.scan_and_fill(0, w);
    for (std::size_t c = 0; c < e.defined(); ++c) {
      const auto coset = static_cast<std::int32_t>(c);
      for (const auto& r : rels) {
        if (!e.alive(coset)) break;
        e.scan_and_fill(coset, r);
      }
      if (e.alive(coset)) e.fill_row(coset);
    }
    return CosetTable(p.generators(), e.compact());
  } catch (const OverflowSignal&) {
    return CosetOverflow{max_cosets};
  }
}

bool verify_coset_table(const CosetTable& t, const Presentation& p,
                        const std::vector<Word>& subgroup) {
  for (std::size_t c = 0; c < t.cosets(); ++c) {
    for (Symbol g : p.generators()) {
      const auto d = t.act(c, g, 1);
      if (d >= t.cosets() || t.act(d, g, -1) != c) return false;
    }
    for (const auto& r : p.relators()) {
      if (t.act(c, r) != c) return false;
    }
  }
  for (const auto& w : subgroup) {
    if (t.act(0, w) != 0) return false;
  }
  return true;
}

std::variant<std::size_t, CosetOverflow> quotient_order(const Presentation& p,
                                                        const std::vector<Word>& extra,
                                                        std::size_t max_cosets) {
  std::vector<Word> rels = p.relators();
  rels.insert(rels.end(), extra.begin(), extra.end());
  const Presentation q(p.generators(), std::move(rels));
  auto result = enumerate_cosets(q, {}, max_cosets);
  if (auto* overflow = std::get_if<CosetOverflow>(&result)) return *overflow;
  return std::get<CosetTable>(result).cosets();
}

}  // namespace zvk
