#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "problogic/rational.hpp"
#include "problogic/sentence.hpp"

namespace problogic {

class ClassicalError : public std::runtime_error {
 public:
  enum class Kind { EmptySet, NotComplete, MixedMember, UnsatisfiableMember };
  ClassicalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ClassicalError::Kind kind);

/// Pairwise conjunctions unsatisfiable and the full disjunction a tautology,
/// both decided over every valuation. Throws ClassicalError(EmptySet) on an empty list.
bool check_complete(const std::vector<Sentence>& members);

/// A list of sentences known to satisfy check_complete.
class CompleteSet {
 public:
  /// Throws ClassicalError(NotComplete / EmptySet).
  explicit CompleteSet(std::vector<Sentence> members);
  const std::vector<Sentence>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<Sentence> members_;
};

enum class Favorability { Favorable, Unfavorable, Neither };

const char* to_string(Favorability f);

/// Favorable when b∧¬a is unsatisfiable, else Unfavorable when b∧a is
/// unsatisfiable, else Neither. An unsatisfiable b meets both conditions and
/// reports Favorable.
Favorability classify_favorability(const Sentence& b, const Sentence& a);

struct ClassicalCount {
  std::size_t favorable;
  std::size_t total;
  Rational probability() const {
    return ratio(Integer(static_cast<unsigned long>(favorable)), Integer(static_cast<unsigned long>(total)));
  }
};

/// m favorable members out of n, for an equiprobable complete set. Throws
/// ClassicalError(MixedMember) if a member is Neither and
/// (UnsatisfiableMember) if a member can never hold.
ClassicalCount classical_count(const Sentence& a, const CompleteSet& cs);

/// m/n
Rational classical_probability(const Sentence& a, const CompleteSet& cs);

}  // namespace problogic
