#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "problogic/sentence.hpp"
#include "problogic/truth_table.hpp"

namespace problogic {

/// Total two-valued assignment over a basic set; bits[i] is the value of atom i.
struct Valuation {
  std::vector<bool> bits;

  /// The valuation whose bitstring (atom 0 first) spells `minterm` in binary.
  static Valuation from_minterm(std::uint64_t minterm, std::size_t atoms);
  /// Parses a string of '0'/'1', atom 0 first.
  static Valuation parse(std::string_view bits);

  std::size_t size() const { return bits.size(); }
  std::uint64_t minterm() const;
  std::string to_string() const;
  bool operator==(const Valuation&) const = default;
};

/// Two-valued semantics: ¬ flips, ∧ multiplies. Throws std::domain_error
/// when the sentence mentions an atom outside the valuation.
bool eval(const Sentence& s, const Valuation& v);

/// True iff `s` holds under every valuation of the atoms occurring in it.
bool is_tautology(const Sentence& s);
bool is_satisfiable(const Sentence& s);

/// Agreement of `a` and `b` under every valuation.
bool semantic_equal(const Sentence& a, const Sentence& b);

/// Truth tables of several sentences over the union of their atoms, which
/// are renumbered densely in increasing id order.
std::vector<TruthTable> joint_truth_tables(std::span<const Sentence> sentences);

}  // namespace problogic
