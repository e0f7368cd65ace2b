#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "problogic/logic.hpp"
#include "problogic/rational.hpp"
#include "problogic/sentence.hpp"

namespace problogic {

class BFunctionError : public std::runtime_error {
 public:
  enum class Kind { WrongSize, NegativeMass, SumNotOne, ZeroCondition };
  BFunctionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A B-function on the propositional closure of a finite basic set, stored
/// as a probability measure on its 2^n minterms. Minterm w is the valuation
/// whose bitstring (atom 0 first) is w in binary. The value of a sentence is
/// the total mass of the minterms that satisfy it.
class BFunction {
 public:
  /// Throws BFunctionError unless masses has 2^atoms entries, all >= 0, summing to 1.
  BFunction(std::size_t atoms, std::vector<Rational> masses);

  static BFunction uniform(std::size_t atoms);

  std::size_t atoms() const { return atoms_; }
  std::size_t minterms() const { return masses_.size(); }
  const Rational& mass(std::uint64_t minterm) const { return masses_.at(minterm); }
  const std::vector<Rational>& masses() const { return masses_; }

  bool operator==(const BFunction&) const = default;

 private:
  std::size_t atoms_;
  std::vector<Rational> masses_;
};

/// b(s). Throws std::domain_error when s mentions an atom outside the basic set.
Rational b_eval(const BFunction& bf, const Sentence& s);

/// Point mass on v's minterm: the Boolean function of v viewed as a B-function.
BFunction from_valuation(const Valuation& v);

/// b(B/C) = b(C∧B) / b(C). Throws BFunctionError(ZeroCondition) when b(C) = 0.
Rational conditional_prob(const BFunction& bf, const Sentence& b, const Sentence& c);

/// The measure restricted to the minterms satisfying `c`, renormalized.
BFunction condition(const BFunction& bf, const Sentence& c);

/// Whether every sentence with b-value 1 holds in `actual`. On a finite
/// basic set this is exactly: the actual world's minterm has positive mass.
bool is_p_function(const BFunction& bf, const Valuation& actual);

/// Left-nested conjunction of literals pinning every atom to `minterm`'s bits.
Sentence minterm_sentence(std::uint64_t minterm, std::size_t atoms);

/// Disjunction of the minterm sentences with positive mass; b(witness) = 1.
Sentence support_sentence(const BFunction& bf);

struct PairRelation {
  /// b(A∧B) = 0
  bool inconsistent;
  /// b(A∧B) = b(A)·b(B)
  bool independent;
};

PairRelation classify_pair(const BFunction& bf, const Sentence& a, const Sentence& b);

}  // namespace problogic
