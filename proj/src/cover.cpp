#include "zvk/cover.hpp"

#include <array>

#include "zvk/error.hpp"

namespace zvk {

namespace {

const std::array<Symbol, 3>& alphas() {
  static const std::array<Symbol, 3> a{Symbol("a1"), Symbol("a2"), Symbol("a3")};
  return a;
}

int alpha_index(Symbol g) {
  const auto& a = alphas();
  for (int i = 0; i < 3; ++i) {
    if (a[static_cast<std::size_t>(i)] == g) return i;
  }
  return -1;
}

}  // namespace

Symbol kernel_p() {
  static const Symbol p("p");
  return p;
}

Symbol kernel_q() {
  static const Symbol q("q");
  return q;
}

InvolutionWord involution_reduce(const Word& w) {
  InvolutionWord r;
  for (const auto& l : w.letters()) {
    if (alpha_index(l.gen) < 0) {
      throw Error("involution_reduce: foreign generator " + l.gen.name());
    }
    if (l.exp % 2 == 0) continue;
    if (!r.letters_.empty() && r.letters_.back() == l.gen) {
      r.letters_.pop_back();
    } else {
      r.letters_.push_back(l.gen);
    }
  }
  return r;
}

int grade(const InvolutionWord& w) { return w.grade(); }

Word InvolutionWord::to_word() const {
  Word w;
  for (Symbol g : letters_) w *= Word::generator(g);
  return w;
}

std::string InvolutionWord::to_string() const { return to_word().to_string(); }

Word rewrite_to_pq(const InvolutionWord& w) {
  if (w.grade() != 0) throw Error("rewrite_to_pq: word is not in the index-2 kernel");
  const Symbol p = kernel_p();
  const Symbol q = kernel_q();
  // pair[i][j] is the kernel element a_{i+1} a_{j+1}.
  const Word pair[3][3] = {
      {Word{}, Word{{p, 1}}, Word{{p, 1}, {q, -1}}},
      {Word{{p, -1}}, Word{}, Word{{q, -1}}},
      {Word{{q, 1}, {p, -1}}, Word{{q, 1}}, Word{}},
  };
  Word r;
  const auto& l = w.letters();
  for (std::size_t k = 0; k < l.size(); k += 2) {
    r *= pair[alpha_index(l[k])][alpha_index(l[k + 1])];
  }
  return r;
}

InvolutionWord expand_from_pq(const Word& w) {
  const auto& a = alphas();
  const Word p_image{{a[0], 1}, {a[1], 1}};
  const Word q_image{{a[2], 1}, {a[1], 1}};
  Word out;
  for (const auto& l : w.letters()) {
    if (l.gen == kernel_p()) {
      out *= p_image.pow(l.exp);
    } else if (l.gen == kernel_q()) {
      out *= q_image.pow(l.exp);
    } else {
      throw Error("expand_from_pq: foreign generator " + l.gen.name());
    }
  }
  return involution_reduce(out);
}

FreeEndo lift_monodromy(const FreeEndo& m) {
  const auto& a = alphas();
  if (m.domain() != std::vector<Symbol>(a.begin(), a.end())) {
    throw Error("lift_monodromy: expected an endomorphism of F(a1, a2, a3)");
  }
  std::vector<Word> images;
  for (const Word& x : {Word{{a[0], 1}, {a[1], 1}}, Word{{a[2], 1}, {a[1], 1}}}) {
    const InvolutionWord folded = involution_reduce(m.apply(x));
    if (folded.grade() != 0) {
      throw Error("lift_monodromy: image escapes the kernel (grade 1)");
    }
    images.push_back(rewrite_to_pq(folded));
  }
  return FreeEndo({kernel_p(), kernel_q()}, std::move(images));
}

}  // namespace zvk
