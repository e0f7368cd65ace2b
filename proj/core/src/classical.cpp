#include "problogic/classical.hpp"

#include "problogic/logic.hpp"

namespace problogic {

const char* to_string(ClassicalError::Kind kind) {
  switch (kind) {
    case ClassicalError::Kind::EmptySet: return "EmptySet";
    case ClassicalError::Kind::NotComplete: return "NotComplete";
    case ClassicalError::Kind::MixedMember: return "MixedMember";
    case ClassicalError::Kind::UnsatisfiableMember: return "UnsatisfiableMember";
  }
  return "?";
}

const char* to_string(Favorability f) {
  switch (f) {
    case Favorability::Favorable: return "favorable";
    case Favorability::Unfavorable: return "unfavorable";
    case Favorability::Neither: return "neither";
  }
  return "?";
}

bool check_complete(const std::vector<Sentence>& members) {
  if (members.empty()) throw ClassicalError(ClassicalError::Kind::EmptySet, "a complete set needs at least one member");
  auto tables = joint_truth_tables(members);
  TruthTable covered = tables.front();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (!(tables[i] & tables[j]).none()) return false;
    covered = covered | tables[i];
  }
  return covered.all();
}

CompleteSet::CompleteSet(std::vector<Sentence> members) : members_(std::move(members)) {
  if (!check_complete(members_)) {
    throw ClassicalError(ClassicalError::Kind::NotComplete,
                         "members are not pairwise exclusive or do not exhaust every valuation");
  }
}

Favorability classify_favorability(const Sentence& b, const Sentence& a) {
  const Sentence pair[] = {b, a};
  auto tables = joint_truth_tables(pair);
  if ((tables[0] & ~tables[1]).none()) return Favorability::Favorable;
  if ((tables[0] & tables[1]).none()) return Favorability::Unfavorable;
  return Favorability::Neither;
}

ClassicalCount classical_count(const Sentence& a, const CompleteSet& cs) {
  std::size_t favorable = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Sentence& member = cs.members()[i];
    if (!is_satisfiable(member)) {
      throw ClassicalError(ClassicalError::Kind::UnsatisfiableMember,
                           "member " + std::to_string(i + 1) + " can never hold, so members cannot be equiprobable");
    }
    switch (classify_favorability(member, a)) {
      case Favorability::Favorable: ++favorable; break;
      case Favorability::Unfavorable: break;
      case Favorability::Neither:
        throw ClassicalError(ClassicalError::Kind::MixedMember,
                             "member " + std::to_string(i + 1) + " is neither favorable nor unfavorable");
    }
  }
  return ClassicalCount{favorable, cs.size()};
}

Rational classical_probability(const Sentence& a, const CompleteSet& cs) {
  return classical_count(a, cs).probability();
}

}  // namespace problogic
