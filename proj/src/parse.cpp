#include "zvk/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "zvk/error.hpp"

namespace zvk {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t line = 1) : text_(text), line_(line) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t line = line_;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  /// Generator name, optionally with a trailing + or -.
  std::string generator_name() {
    skip_space();
    if (!ident_start(peek())) fail("expected a generator name");
    std::string name;
    while (ident_char(peek())) name += advance();
    if (peek() == '+' || peek() == '-') name += advance();
    return name;
  }

  std::string identifier() {
    skip_space();
    if (!ident_start(peek())) fail("expected an identifier");
    std::string name;
    while (ident_char(peek())) name += advance();
    return name;
  }

  /// Optionally signed decimal integer, no space after the sign.
  Exponent integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = advance() == '-';
    if (!digit(peek())) fail("expected an integer");
    Exponent v = 0;
    while (digit(peek())) {
      const int d = advance() - '0';
      if (v > (std::numeric_limits<Exponent>::max() - d) / 10) fail_at(start, "integer overflow");
      v = v * 10 + d;
    }
    return negative ? -v : v;
  }

  /// Unsigned decimal digits as an exact integer.
  mpz_class natural() {
    skip_space();
    if (!digit(peek())) fail("expected a number");
    std::string digits;
    while (digit(peek())) digits += advance();
    return mpz_class(digits);
  }

 private:
  char advance() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// Letters up to the end of input or a stop character.
Word scan_word(Scanner& s, const std::vector<Symbol>* gens, std::string_view stops) {
  std::vector<Letter> letters;
  s.skip_space();
  if (s.peek() == '1') {
    const std::size_t at = s.pos();
    if (s.integer() != 1) s.fail_at(at, "expected a generator name");
    s.skip_space();
    if (!s.eof() && stops.find(s.peek()) == std::string_view::npos) {
      s.fail("the identity word 1 stands alone");
    }
    return {};
  }
  while (!s.eof() && stops.find(s.peek()) == std::string_view::npos) {
    const std::size_t at = s.pos();
    const Symbol g(s.generator_name());
    if (gens && std::find(gens->begin(), gens->end(), g) == gens->end()) {
      s.fail_at(at, "unknown generator '" + g.name() + "'");
    }
    Exponent e = 1;
    if (s.peek() == '^') {
      s.accept('^');
      const std::size_t exp_at = s.pos();
      e = s.integer();
      if (e == 0) s.fail_at(exp_at, "zero exponent");
    }
    letters.push_back({g, e});
    s.skip_space();
  }
  if (letters.empty()) s.fail("empty word");
  return Word(letters);
}

Word parse_whole_word(std::string_view text, const std::vector<Symbol>* gens) {
  Scanner s(text);
  Word w = scan_word(s, gens, "");
  s.skip_space();
  if (!s.eof()) s.fail("unexpected character");
  return w;
}

BraidWord scan_braid(Scanner& s, int strands) {
  std::vector<BraidLetter> letters;
  int max_index = 1;
  s.skip_space();
  while (!s.eof()) {
    const std::size_t at = s.pos();
    const std::string name = s.identifier();
    if (name.size() < 2 || name[0] != 's' ||
        !std::all_of(name.begin() + 1, name.end(), digit) || name[1] == '0') {
      s.fail_at(at, "expected a braid generator s<i>, got '" + name + "'");
    }
    if (name.size() > 6) s.fail_at(at, "braid index too large");
    const int index = std::stoi(name.substr(1));
    if (strands > 0 && index >= strands) {
      s.fail_at(at, "'" + name + "' needs more than " + std::to_string(strands) + " strands");
    }
    Exponent e = 1;
    if (s.peek() == '^') {
      s.accept('^');
      const std::size_t exp_at = s.pos();
      e = s.integer();
      if (e == 0) s.fail_at(exp_at, "zero exponent");
      if (e > 1000000 || e < -1000000) s.fail_at(exp_at, "braid exponent too large");
    }
    for (Exponent k = 0; k < (e > 0 ? e : -e); ++k) letters.push_back({index, e > 0 ? 1 : -1});
    max_index = std::max(max_index, index);
    s.skip_space();
  }
  return BraidWord(strands > 0 ? strands : max_index + 1, std::move(letters));
}

std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view l = text.substr(0, nl);
    const auto first = l.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && l[first] != '#') out.emplace_back(line, l);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++line;
  }
  return out;
}

// ------------------------------------------------------------ polynomials

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    s_.skip_space();
    if (!s_.eof()) s_.fail("unexpected character");
    return uses_eps_ ? p : p.with_field(Field::Rational);
  }

 private:
  // Everything is built over Q(eps) and narrowed at the end.
  static constexpr Field kField = Field::Eisenstein;

  MultiPoly expr() {
    MultiPoly p(kField);
    s_.skip_space();
    bool negative = s_.accept('-');
    if (!negative) s_.accept('+');
    for (;;) {
      MultiPoly t = term();
      p += negative ? -t : t;
      if (s_.accept('+')) {
        negative = false;
      } else if (s_.accept('-')) {
        negative = true;
      } else {
        return p;
      }
    }
  }

  MultiPoly term() {
    MultiPoly t = factor();
    for (;;) {
      s_.skip_space();
      const char c = s_.peek();
      if (c == '*') {
        s_.accept('*');
        t = t * factor();
      } else if (c == '/') {
        s_.accept('/');
        const std::size_t at = s_.pos();
        const MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) s_.fail_at(at, "can only divide by a nonzero constant");
        t = t * MultiPoly(d.constant_term().inverse(), kField);
      } else if (c == '(' || ident_start(c) || digit(c)) {
        t = t * factor();
      } else {
        return t;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (s_.accept('^')) {
      const std::size_t at = s_.pos();
      const Exponent e = s_.integer();
      if (e < 0) s_.fail_at(at, "negative power in a polynomial");
      if (e > 10000) s_.fail_at(at, "power too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    s_.skip_space();
    const char c = s_.peek();
    if (c == '(') {
      s_.accept('(');
      MultiPoly p = expr();
      s_.expect(')');
      return p;
    }
    if (digit(c)) {
      const mpz_class num = s_.natural();
      mpz_class den = 1;
      if (s_.peek() == '/') {
        s_.accept('/');
        const std::size_t at = s_.pos();
        den = s_.natural();
        if (den == 0) s_.fail_at(at, "zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return MultiPoly(QEps(q), kField);
    }
    if (ident_start(c)) {
      const std::string name = s_.identifier();
      if (name == "eps") {
        uses_eps_ = true;
        return MultiPoly(QEps::eps(), kField);
      }
      return MultiPoly::variable(name, kField);
    }
    s_.fail("expected a number, variable or '('");
  }

  Scanner s_;
  bool uses_eps_ = false;
};

}  // namespace

Word parse_word(std::string_view text) { return parse_whole_word(text, nullptr); }

Word parse_word(std::string_view text, const std::vector<Symbol>& gens) {
  return parse_whole_word(text, &gens);
}

std::vector<Word> parse_word_list(std::string_view text, const std::vector<Symbol>& gens) {
  Scanner s(text);
  std::vector<Word> out;
  s.skip_space();
  if (s.eof()) return out;
  for (;;) {
    out.push_back(scan_word(s, &gens, ","));
    if (!s.accept(',')) break;
  }
  s.skip_space();
  if (!s.eof()) s.fail("unexpected character");
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  Scanner s(text);
  return scan_braid(s, strands);
}

Presentation parse_presentation(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("expected a presentation", 1, 1);
  if (lines.size() > 1) throw ParseError("expected a single presentation line", lines[1].first, 1);
  Scanner s(lines[0].second, lines[0].first);

  if (!s.accept_keyword("gens")) s.fail("expected 'gens:'");
  s.expect(':');
  std::vector<Symbol> gens;
  s.skip_space();
  if (s.peek() != ';') {
    for (;;) {
      const std::size_t at = s.pos();
      const Symbol g(s.generator_name());
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
        s.fail_at(at, "duplicate generator '" + g.name() + "'");
      }
      gens.push_back(g);
      if (!s.accept(',')) break;
    }
  }
  s.expect(';');
  if (!s.accept_keyword("rels")) s.fail("expected 'rels:'");
  s.expect(':');
  std::vector<Word> rels;
  s.skip_space();
  if (!s.eof()) {
    for (;;) {
      rels.push_back(scan_word(s, &gens, ","));
      if (!s.accept(',')) break;
    }
  }
  s.skip_space();
  if (!s.eof()) s.fail("unexpected character");
  return Presentation(std::move(gens), std::move(rels));
}

MultiPoly parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

Weights parse_weights(std::string_view text, const std::vector<Symbol>& gens) {
  Scanner s(text);
  Weights w;
  s.skip_space();
  if (s.eof()) return w;
  for (;;) {
    const std::size_t at = s.pos();
    const Symbol g(s.generator_name());
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
      s.fail_at(at, "unknown generator '" + g.name() + "'");
    }
    s.expect('=');
    if (!w.emplace(g, s.integer()).second) s.fail_at(at, "duplicate weight for " + g.name());
    if (!s.accept(',')) break;
  }
  s.skip_space();
  if (!s.eof()) s.fail("unexpected character");
  return w;
}

ZvkInput parse_zvk_input(std::string_view text) {
  ZvkInput in;
  for (const auto& [line, content] : content_lines(text)) {
    Scanner s(content, line);
    if (s.accept_keyword("kept")) {
      s.expect(':');
      in.kept.push_back(scan_braid(s, 3));
    } else if (s.accept_keyword("removed")) {
      const std::size_t at = s.pos();
      const Symbol g(s.generator_name());
      const auto clash = [&g](const auto& entry) { return entry.first == g; };
      if (std::any_of(in.removed.begin(), in.removed.end(), clash)) {
        s.fail_at(at, "duplicate generator '" + g.name() + "'");
      }
      s.expect(':');
      in.removed.emplace_back(g, scan_braid(s, 3));
    } else {
      s.fail("expected 'kept:' or 'removed <name>:'");
    }
  }
  return in;
}

}  // namespace zvk
