#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "problogic/sentence.hpp"

namespace problogic {

/// Parse failure; `column` is 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t column, const std::string& message)
      : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct ParsedFormula {
  std::string source;
  Sentence ast;
  AtomTable atoms;
};

/// Formula grammar, loosest to tightest:
///
///   formula := disj ( "->" formula )?        right-associative
///   disj    := conj ( "|" conj )*
///   conj    := unary ( "&" unary )*
///   unary   := "!" unary | atom | "(" formula ")"
///   atom    := [A-Za-z_][A-Za-z0-9_]*
///
/// `|` and `->` build ¬(¬A∧¬B) and ¬(A∧¬B). New atom names are appended to
/// `atoms` in order of first appearance.
ParsedFormula parse_formula(std::string_view text, AtomTable atoms = {});

/// Parses into an existing table, extending it in place.
Sentence parse_into(std::string_view text, AtomTable& atoms);

/// Renders with minimal parentheses, showing ¬(A∧¬B) as `A -> B` and
/// ¬(¬A∧¬B) as `A | B` when B is not a negation and A is not of the form
/// C∧¬D (that case prints as `(C -> D) -> B`).
std::string format_formula(const Sentence& s, const AtomTable& atoms);

}  // namespace problogic
