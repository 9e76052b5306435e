#include "pcl/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace pcl {

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Int;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      } else if (std::string_view("{};:,*()^-+").find(c) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col_;  // count code points, not continuation bytes
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::span<const std::string> gens) : toks_(std::move(toks)), gens_(gens) {}

  Presentation presentation() {
    Presentation p;
    expect_ident("group");
    if (peek().kind == Tok::Ident) p.name = next().text;
    expect_punct("{");
    expect_keyword("gens");
    while (peek().kind == Tok::Ident) {
      const Token t = next();
      if (std::find(p.generators.begin(), p.generators.end(), t.text) != p.generators.end())
        throw DuplicateGenerator("duplicate generator '" + t.text + "'", t.line, t.column);
      p.generators.push_back(t.text);
    }
    if (p.generators.empty()) fail("expected at least one generator");
    expect_punct(";");
    gens_ = p.generators;

    expect_keyword("rels");
    p.relator_exprs.push_back(word());
    while (is_punct(",")) {
      next();
      p.relator_exprs.push_back(word());
    }
    expect_punct(";");

    if (peek().kind == Tok::Ident && peek().text == "involutions") {
      expect_keyword("involutions");
      if (peek().kind != Tok::Ident) fail("expected at least one involution");
      while (peek().kind == Tok::Ident) {
        const Token t = next();
        const int g = p.generator_index(t.text);
        if (g < 0) throw UndeclaredGenerator("undeclared generator '" + t.text + "'", t.line, t.column);
        if (!p.is_involution(g)) p.involutions.push_back(g);
      }
      expect_punct(";");
    }
    expect_punct("}");
    if (peek().kind != Tok::End) fail("trailing input after presentation");

    for (const auto& expr : p.relator_exprs) p.relators.push_back(reduce_signs(p, expand(expr)));
    return p;
  }

  WordExpr word() {
    WordExpr w;
    w.factors.push_back(factor());
    while (is_punct("*")) {
      next();
      w.factors.push_back(factor());
    }
    return w;
  }

  void finish() {
    if (peek().kind != Tok::End) fail("trailing input after word");
  }

 private:
  static Word reduce_signs(const Presentation& p, Word w) {
    for (auto& l : w)
      if (p.is_involution(l.generator)) l.sign = 1;
    return w;
  }

  WordExpr::Factor factor() {
    WordExpr::Factor f;
    const Token t = next();
    if (t.kind == Tok::Ident) {
      auto it = std::find(gens_.begin(), gens_.end(), t.text);
      if (it == gens_.end()) throw UndeclaredGenerator("undeclared generator '" + t.text + "'", t.line, t.column);
      f.generator = static_cast<int>(it - gens_.begin());
    } else if (t.kind == Tok::Punct && t.text == "(") {
      f.group = word().factors;
      expect_punct(")");
    } else {
      throw ParseError("expected generator or '('", t.line, t.column);
    }
    if (is_punct("^")) {
      next();
      int sign = 1;
      if (is_punct("-") || is_punct("+")) sign = next().text == "-" ? -1 : 1;
      const Token n = next();
      if (n.kind != Tok::Int) throw ParseError("expected integer exponent", n.line, n.column);
      int value = 0;
      auto [ptr, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), value);
      if (ec != std::errc()) throw ParseError("exponent out of range", n.line, n.column);
      f.exponent = sign * value;
    }
    return f;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() {
    Token t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_punct(std::string_view s) const { return peek().kind == Tok::Punct && peek().text == s; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

  void expect_punct(std::string_view s) {
    if (!is_punct(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  void expect_ident(std::string_view s) {
    if (peek().kind != Tok::Ident || peek().text != s) fail("expected '" + std::string(s) + "'");
    next();
  }
  void expect_keyword(std::string_view s) {
    expect_ident(s);
    expect_punct(":");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::span<const std::string> gens_;
};

void expand_into(const std::vector<WordExpr::Factor>& factors, Word& out);

void expand_factor(const WordExpr::Factor& f, Word& out) {
  Word base;
  if (f.generator >= 0)
    base.push_back({f.generator, 1});
  else
    expand_into(f.group, base);
  const int e = f.exponent.value_or(1);
  const Word unit = e < 0 ? inverse_word(base) : base;
  for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), unit.begin(), unit.end());
}

void expand_into(const std::vector<WordExpr::Factor>& factors, Word& out) {
  for (const auto& f : factors) expand_factor(f, out);
}

void emit_factors(const Presentation& p, const std::vector<WordExpr::Factor>& factors, std::ostream& os) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    const auto& f = factors[i];
    if (f.generator >= 0) {
      os << p.generators.at(f.generator);
    } else {
      os << '(';
      emit_factors(p, f.group, os);
      os << ')';
    }
    if (f.exponent) os << '^' << *f.exponent;
  }
}

}  // namespace

int Presentation::generator_index(std::string_view symbol) const {
  auto it = std::find(generators.begin(), generators.end(), symbol);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

bool Presentation::is_involution(int generator) const {
  return std::find(involutions.begin(), involutions.end(), generator) != involutions.end();
}

std::vector<Word> Presentation::effective_relators() const {
  std::vector<Word> out = relators;
  for (int g : involutions) {
    const Word square{{g, 1}, {g, 1}};
    if (std::find(out.begin(), out.end(), square) == out.end()) out.push_back(square);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Parser parser(Lexer(text).run(), {});
  return parser.presentation();
}

Word parse_word(std::span<const std::string> generators, std::string_view text) {
  Parser parser(Lexer(text).run(), generators);
  WordExpr expr = parser.word();
  parser.finish();
  return expand(expr);
}

Word expand(const WordExpr& expr) {
  Word out;
  expand_into(expr.factors, out);
  return out;
}

std::string emit_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "group ";
  if (!p.name.empty()) os << p.name << ' ';
  os << "{ gens:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << "; rels: ";
  for (size_t i = 0; i < p.relator_exprs.size(); ++i) {
    if (i) os << ", ";
    emit_factors(p, p.relator_exprs[i].factors, os);
  }
  os << ';';
  if (!p.involutions.empty()) {
    os << " involutions:";
    for (int g : p.involutions) os << ' ' << p.generators.at(g);
    os << ';';
  }
  os << " }";
  return os.str();
}

std::string format_word(std::span<const std::string> generators, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int power = static_cast<int>(j - i) * w[i].sign;
    if (!out.empty()) out += '*';
    out += generators[w[i].generator];
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

Word reduce_word(const Presentation& p, const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l.generator < 0 || l.generator >= static_cast<int>(p.generators.size()))
      throw Error("reduce_word: unknown symbol index " + std::to_string(l.generator));
    if (l.sign != 1 && l.sign != -1) throw Error("reduce_word: letter sign must be +1 or -1");
    if (p.is_involution(l.generator)) l.sign = 1;
    // an involution letter is its own inverse, so k*k cancels like k*k^-1
    if (!out.empty() && out.back().generator == l.generator &&
        (out.back().sign == -l.sign || p.is_involution(l.generator))) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace pcl
