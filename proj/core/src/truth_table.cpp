#include "problogic/truth_table.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace problogic {

namespace {

// Word patterns for minterm bit positions 0..5 within one 64-bit word.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

TruthTable::TruthTable(std::size_t vars) : vars_(vars) {
  if (vars > kMaxAtoms) {
    throw std::domain_error("truth table over " + std::to_string(vars) + " atoms exceeds the limit of " +
                            std::to_string(kMaxAtoms));
  }
  words_.assign(vars <= 6 ? 1 : (std::size_t{1} << (vars - 6)), 0);
}

void TruthTable::mask_tail() {
  if (vars_ < 6) words_[0] &= (std::uint64_t{1} << rows()) - 1;
}

TruthTable TruthTable::constant(std::size_t vars, bool value) {
  TruthTable t(vars);
  for (auto& w : t.words_) w = value ? ~std::uint64_t{0} : 0;
  t.mask_tail();
  return t;
}

TruthTable TruthTable::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw std::domain_error("variable index out of range");
  TruthTable t(vars);
  std::size_t bit = vars - 1 - index;
  if (bit < 6) {
    for (auto& w : t.words_) w = kLowPatterns[bit];
  } else {
    for (std::size_t j = 0; j < t.words_.size(); ++j) t.words_[j] = ((j >> (bit - 6)) & 1U) ? ~std::uint64_t{0} : 0;
  }
  t.mask_tail();
  return t;
}

TruthTable TruthTable::of(const Sentence& s, std::size_t vars) {
  return of(s, vars, [vars](AtomId id) -> std::size_t {
    if (id >= vars) {
      throw std::domain_error("atom id " + std::to_string(id) + " outside a basic set of size " + std::to_string(vars));
    }
    return id;
  });
}

TruthTable TruthTable::of(const Sentence& s, std::size_t vars, const std::function<std::size_t(AtomId)>& var_of) {
  switch (s.kind()) {
    case Connective::Atom: return variable(vars, var_of(s.atom_id()));
    case Connective::Not: return ~of(s.operand(), vars, var_of);
    case Connective::And: return of(s.left(), vars, var_of) & of(s.right(), vars, var_of);
  }
  throw std::logic_error("unreachable");
}

bool TruthTable::all() const { return *this == constant(vars_, true); }

bool TruthTable::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t TruthTable::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

TruthTable TruthTable::operator~() const {
  TruthTable t(*this);
  for (auto& w : t.words_) w = ~w;
  t.mask_tail();
  return t;
}

TruthTable TruthTable::operator&(const TruthTable& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("truth tables over different variable counts");
  TruthTable t(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] &= other.words_[i];
  return t;
}

TruthTable TruthTable::operator|(const TruthTable& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("truth tables over different variable counts");
  TruthTable t(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] |= other.words_[i];
  return t;
}

}  // namespace problogic
