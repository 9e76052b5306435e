#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcl/graph.hpp"

namespace pcl {

/// Syntax error in presentation text, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UndeclaredGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Relator as written, kept so that emitting reproduces the source modulo whitespace.
struct WordExpr {
  struct Factor {
    int generator = -1;          // >= 0 for a plain symbol
    std::vector<Factor> group;   // parenthesised subword when generator < 0
    std::optional<int> exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;
  friend bool operator==(const WordExpr&, const WordExpr&) = default;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<WordExpr> relator_exprs;
  /// Expanded relators, involution letters normalised to sign +1.
  std::vector<Word> relators;
  std::vector<int> involutions;

  int generator_index(std::string_view symbol) const;
  bool is_involution(int generator) const;
  /// Relators plus g^2 for every declared involution not already listed.
  std::vector<Word> effective_relators() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Grammar:
///   presentation := "group" [name] "{" "gens:" ident+ ";" "rels:" word {"," word} ";"
///                   ["involutions:" ident+ ";"] "}"
///   word := factor {"*" factor};  factor := (ident | "(" word ")") ["^" signed-int]
/// `#` starts a comment running to end of line.
Presentation parse_presentation(std::string_view text);

std::string emit_presentation(const Presentation& p);

/// Parse a word (same factor grammar) over the given generator symbols.
Word parse_word(std::span<const std::string> generators, std::string_view text);

/// Expand a relator expression into letters.
Word expand(const WordExpr& expr);

/// Runs of a letter are written as powers: "a^2*b^-1". The empty word is "e".
std::string format_word(std::span<const std::string> generators, const Word& w);

Word inverse_word(const Word& w);

/// Free reduction plus involution sign normalisation. Not a word-problem solver.
Word reduce_word(const Presentation& p, const Word& w);

}  // namespace pcl
