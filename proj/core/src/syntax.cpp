#include "problogic/syntax.hpp"

#include <cctype>
#include <optional>

namespace problogic {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AtomTable& atoms) : text_(text), atoms_(atoms) {}

  Sentence parse() {
    Sentence s = formula();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_ + 1, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Sentence formula() {
    Sentence lhs = disjunction();
    if (accept("->")) return implies(lhs, formula());
    return lhs;
  }

  Sentence disjunction() {
    Sentence lhs = conjunction();
    while (accept("|")) lhs = disjoin(lhs, conjunction());
    return lhs;
  }

  Sentence conjunction() {
    Sentence lhs = unary();
    while (accept("&")) lhs = conjoin(lhs, unary());
    return lhs;
  }

  Sentence unary() {
    if (accept("!")) return negate(unary());
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sentence inner = formula();
      if (!accept(")")) {
        if (pos_ >= text_.size()) fail("expected ')' before end of formula");
        fail("expected ')'");
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Sentence::atom(atoms_.intern(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  AtomTable& atoms_;
  std::size_t pos_ = 0;
};

enum Level { kImplication = 1, kDisjunction = 2, kConjunction = 3, kUnary = 4 };

void render(const Sentence& s, const AtomTable& atoms, int context, std::string& out);

void wrap(const Sentence& s, const AtomTable& atoms, int own, int context, std::string& out,
          void (*body)(const Sentence&, const AtomTable&, std::string&)) {
  bool parens = own < context;
  if (parens) out.push_back('(');
  body(s, atoms, out);
  if (parens) out.push_back(')');
}

std::optional<std::pair<Sentence, Sentence>> sugared_disjunction(const Sentence& s) {
  auto d = s.as_disjunction();
  if (!d || d->second.is_not()) return std::nullopt;
  // X = P∧¬Q prints as (P -> Q) -> Y instead
  const Sentence& x = d->first;
  if (x.is_and() && x.right().is_not()) return std::nullopt;
  return d;
}

void render(const Sentence& s, const AtomTable& atoms, int context, std::string& out) {
  if (s.is_atom()) {
    out += atoms.name(s.atom_id());
    return;
  }
  if (sugared_disjunction(s)) {
    wrap(s, atoms, kDisjunction, context, out, [](const Sentence& t, const AtomTable& a, std::string& o) {
      auto [x, y] = *sugared_disjunction(t);
      render(x, a, kDisjunction, o);
      o += " | ";
      render(y, a, kConjunction, o);
    });
    return;
  }
  if (s.as_implication()) {
    wrap(s, atoms, kImplication, context, out, [](const Sentence& t, const AtomTable& a, std::string& o) {
      auto [x, y] = *t.as_implication();
      render(x, a, kDisjunction, o);
      o += " -> ";
      render(y, a, kImplication, o);
    });
    return;
  }
  if (s.is_not()) {
    out.push_back('!');
    render(s.operand(), atoms, kUnary, out);
    return;
  }
  wrap(s, atoms, kConjunction, context, out, [](const Sentence& t, const AtomTable& a, std::string& o) {
    render(t.left(), a, kConjunction, o);
    o += " & ";
    render(t.right(), a, kUnary, o);
  });
}

}  // namespace

ParsedFormula parse_formula(std::string_view text, AtomTable atoms) {
  Sentence ast = parse_into(text, atoms);
  return ParsedFormula{std::string(text), std::move(ast), std::move(atoms)};
}

Sentence parse_into(std::string_view text, AtomTable& atoms) { return Parser(text, atoms).parse(); }

std::string format_formula(const Sentence& s, const AtomTable& atoms) {
  std::string out;
  render(s, atoms, kImplication, out);
  return out;
}

}  // namespace problogic
