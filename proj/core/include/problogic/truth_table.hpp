#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "problogic/sentence.hpp"

namespace problogic {

/// Bit-packed truth table over `vars` variables: bit w holds the value at
/// minterm w, where variable 0 is the most significant bit of w.
class TruthTable {
 public:
  /// Evaluates `s` with atom id i mapped to variable i. Throws
  /// std::domain_error if an atom id is >= vars or vars > kMaxAtoms.
  static TruthTable of(const Sentence& s, std::size_t vars);

  /// Evaluates `s` with atoms mapped through `var_of`, which must return a
  /// variable index < vars for every atom that occurs.
  static TruthTable of(const Sentence& s, std::size_t vars, const std::function<std::size_t(AtomId)>& var_of);

  static TruthTable constant(std::size_t vars, bool value);
  static TruthTable variable(std::size_t vars, std::size_t index);

  std::size_t vars() const { return vars_; }
  std::size_t rows() const { return std::size_t{1} << vars_; }
  bool test(std::size_t minterm) const { return (words_[minterm >> 6] >> (minterm & 63)) & 1U; }
  bool all() const;
  bool none() const;
  std::size_t count() const;

  TruthTable operator~() const;
  TruthTable operator&(const TruthTable& other) const;
  TruthTable operator|(const TruthTable& other) const;
  bool operator==(const TruthTable& other) const = default;

 private:
  explicit TruthTable(std::size_t vars);
  void mask_tail();

  std::size_t vars_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace problogic
