#include "zvk/words.hpp"

#include <algorithm>
#include <sstream>

#include "zvk/error.hpp"

namespace zvk {

Exponent add_exponents(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

Exponent mul_exponents(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

// ---------------------------------------------------------------- Word

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push(l);
}

Word::Word(std::span<const Letter> letters) {
  for (const auto& l : letters) push(l);
}

Word Word::generator(Symbol g, Exponent e) { return Word{{g, e}}; }

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    Exponent e = add_exponents(letters_.back().exp, l.exp);
    if (e == 0) {
      letters_.pop_back();
    } else {
      letters_.back().exp = e;
    }
    return;
  }
  letters_.push_back(l);
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Exponent Word::length() const {
  Exponent n = 0;
  for (const auto& l : letters_) n = add_exponents(n, l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    r.letters_.push_back({it->gen, -it->exp});
  }
  return r;
}

Word Word::pow(Exponent k) const {
  if (k < 0) return inverse().pow(-k);
  Word result;
  Word base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Exponent Word::exponent_sum(Symbol g) const {
  Exponent s = 0;
  for (const auto& l : letters_) {
    if (l.gen == g) s = add_exponents(s, l.exp);
  }
  return s;
}

bool Word::uses(Symbol g) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [g](const Letter& l) { return l.gen == g; });
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].gen == letters_[hi - 1].gen) {
    Exponent merged = add_exponents(letters_[lo].exp, letters_[hi - 1].exp);
    if (merged != 0) {
      // One syllable survives; it joins the remaining core on either side.
      Word r;
      r.letters_.push_back({letters_[lo].gen, merged});
      for (std::size_t i = lo + 1; i + 1 < hi; ++i) r.letters_.push_back(letters_[i]);
      return r;
    }
    ++lo;
    --hi;
  }
  Word r;
  r.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return r;
}

Word Word::rotated(std::size_t i) const {
  Word r;
  const std::size_t n = letters_.size();
  for (std::size_t k = 0; k < n; ++k) r.push(letters_[(i + k) % n]);
  return r;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << l.gen.name();
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r *= b;
  return r;
}

Word& Word::operator*=(const Word& b) {
  for (const auto& l : b.letters_) push(l);
  return *this;
}

// ------------------------------------------------------------- FreeEndo

FreeEndo::FreeEndo(std::vector<Symbol> domain, std::vector<Word> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (domain_.size() != images_.size()) {
    throw Error("endomorphism needs exactly one image per generator");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = i + 1; j < domain_.size(); ++j) {
      if (domain_[i] == domain_[j]) {
        throw Error("duplicate generator in domain: " + domain_[i].name());
      }
    }
  }
  for (const auto& w : images_) {
    for (const auto& l : w.letters()) {
      if (std::find(domain_.begin(), domain_.end(), l.gen) == domain_.end()) {
        throw Error("image uses generator outside the domain: " + l.gen.name());
      }
    }
  }
}

FreeEndo FreeEndo::identity(std::vector<Symbol> domain) {
  std::vector<Word> images;
  images.reserve(domain.size());
  for (Symbol g : domain) images.push_back(Word::generator(g));
  FreeEndo e(std::move(domain), std::move(images));
  e.automorphism_ = true;
  return e;
}

const Word& FreeEndo::image(Symbol g) const {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] == g) return images_[i];
  }
  throw Error("generator not in endomorphism domain: " + g.name());
}

Word FreeEndo::apply(const Word& w) const {
  Word r;
  for (const auto& l : w.letters()) r *= image(l.gen).pow(l.exp);
  return r;
}

std::string FreeEndo::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) s += ", ";
    s += domain_[i].name() + " -> " + images_[i].to_string();
  }
  return s;
}

FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner) {
  if (outer.domain() != inner.domain()) throw Error("compose: domain mismatch");
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  return FreeEndo(inner.domain(), std::move(images));
}

bool are_inverse(const FreeEndo& a, const FreeEndo& b) {
  if (a.domain() != b.domain()) return false;
  const FreeEndo id = FreeEndo::identity(a.domain());
  return compose(a, b) == id && compose(b, a) == id;
}

FreeEndo mark_automorphism(FreeEndo e, const FreeEndo& inverse) {
  if (!are_inverse(e, inverse)) throw Error("not a two-sided inverse");
  e.automorphism_ = true;
  return e;
}

// ------------------------------------------------------------ BraidWord

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error("braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      throw Error("braid generator s" + std::to_string(l.index) + " out of range for " +
                  std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw Error("braid letter exponent must be +-1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.push_back({it->index, -it->sign});
  }
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::with_strands(int n) const {
  if (n < strands_) throw Error("cannot drop strands from a braid");
  return BraidWord(n, letters_);
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += "s" + std::to_string(letters_[i].index);
    if (letters_[i].sign < 0) s += "^-1";
  }
  return s;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw Error("braid product: strand count mismatch");
  std::vector<BraidLetter> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(l));
}

std::vector<Symbol> fiber_generators(int n) {
  std::vector<Symbol> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) gens.emplace_back("a" + std::to_string(i));
  return gens;
}

namespace {

FreeEndo artin_generator(const std::vector<Symbol>& gens, BraidLetter l,
                         BraidConvention convention) {
  const auto i = static_cast<std::size_t>(l.index - 1);
  std::vector<Word> images;
  images.reserve(gens.size());
  for (Symbol g : gens) images.push_back(Word::generator(g));
  const Symbol x = gens[i];
  const Symbol y = gens[i + 1];
  // The flipped convention is the standard action of the inverse letter.
  const bool positive = (l.sign > 0) == (convention == BraidConvention::Standard);
  if (positive) {
    images[i] = Word{{x, 1}, {y, 1}, {x, -1}};
    images[i + 1] = Word::generator(x);
  } else {
    images[i] = Word::generator(y);
    images[i + 1] = Word{{y, -1}, {x, 1}, {y, 1}};
  }
  return FreeEndo(gens, std::move(images));
}

FreeEndo raw_action(const BraidWord& b, BraidConvention convention) {
  const auto gens = fiber_generators(b.strands());
  FreeEndo acc = FreeEndo::identity(gens);
  for (const auto& l : b.letters()) acc = compose(acc, artin_generator(gens, l, convention));
  return acc;
}

}  // namespace

FreeEndo braid_action(const BraidWord& b, BraidConvention convention) {
  return mark_automorphism(raw_action(b, convention), raw_action(b.inverse(), convention));
}

}  // namespace zvk
