#include "problogic/bfunc.hpp"

#include "problogic/truth_table.hpp"

namespace problogic {

BFunction::BFunction(std::size_t atoms, std::vector<Rational> masses) : atoms_(atoms), masses_(std::move(masses)) {
  if (atoms > kMaxAtoms || masses_.size() != (std::size_t{1} << atoms)) {
    throw BFunctionError(BFunctionError::Kind::WrongSize,
                         "a B-function over " + std::to_string(atoms) + " atoms needs 2^" + std::to_string(atoms) +
                             " masses, got " + std::to_string(masses_.size()));
  }
  Rational total = 0;
  for (std::size_t w = 0; w < masses_.size(); ++w) {
    if (masses_[w] < 0) {
      throw BFunctionError(BFunctionError::Kind::NegativeMass, "negative mass at minterm " + std::to_string(w));
    }
    total += masses_[w];
  }
  if (total != 1) throw BFunctionError(BFunctionError::Kind::SumNotOne, "masses sum to " + to_string(total));
}

BFunction BFunction::uniform(std::size_t atoms) {
  if (atoms > kMaxAtoms) throw BFunctionError(BFunctionError::Kind::WrongSize, "too many atoms");
  std::size_t rows = std::size_t{1} << atoms;
  return BFunction(atoms, std::vector<Rational>(rows, Rational(1, rows)));
}

Rational b_eval(const BFunction& bf, const Sentence& s) {
  TruthTable t = TruthTable::of(s, bf.atoms());
  Rational total = 0;
  for (std::size_t w = 0; w < bf.minterms(); ++w)
    if (t.test(w)) total += bf.mass(w);
  return total;
}

BFunction from_valuation(const Valuation& v) {
  if (v.size() > kMaxAtoms) throw BFunctionError(BFunctionError::Kind::WrongSize, "too many atoms");
  std::vector<Rational> masses(std::size_t{1} << v.size(), Rational(0));
  masses[v.minterm()] = 1;
  return BFunction(v.size(), std::move(masses));
}

Rational conditional_prob(const BFunction& bf, const Sentence& b, const Sentence& c) {
  Rational bc = b_eval(bf, c);
  if (bc == 0) throw BFunctionError(BFunctionError::Kind::ZeroCondition, "conditioning sentence has b-value 0");
  return b_eval(bf, conjoin(c, b)) / bc;
}

BFunction condition(const BFunction& bf, const Sentence& c) {
  TruthTable t = TruthTable::of(c, bf.atoms());
  Rational total = 0;
  for (std::size_t w = 0; w < bf.minterms(); ++w)
    if (t.test(w)) total += bf.mass(w);
  if (total == 0) throw BFunctionError(BFunctionError::Kind::ZeroCondition, "conditioning sentence has b-value 0");
  std::vector<Rational> masses(bf.minterms(), Rational(0));
  for (std::size_t w = 0; w < bf.minterms(); ++w)
    if (t.test(w)) masses[w] = bf.mass(w) / total;
  return BFunction(bf.atoms(), std::move(masses));
}

bool is_p_function(const BFunction& bf, const Valuation& actual) {
  if (actual.size() != bf.atoms()) throw std::domain_error("actual world has the wrong number of atoms");
  return bf.mass(actual.minterm()) > 0;
}

Sentence minterm_sentence(std::uint64_t minterm, std::size_t atoms) {
  if (atoms == 0) throw std::domain_error("minterm over an empty basic set");
  Valuation v = Valuation::from_minterm(minterm, atoms);
  std::vector<Sentence> literals;
  for (std::size_t i = 0; i < atoms; ++i) {
    Sentence a = Sentence::atom(static_cast<AtomId>(i));
    literals.push_back(v.bits[i] ? a : negate(a));
  }
  return conjoin_all(literals);
}

Sentence support_sentence(const BFunction& bf) {
  std::vector<Sentence> parts;
  for (std::size_t w = 0; w < bf.minterms(); ++w)
    if (bf.mass(w) > 0) parts.push_back(minterm_sentence(w, bf.atoms()));
  return disjoin_all(parts);
}

PairRelation classify_pair(const BFunction& bf, const Sentence& a, const Sentence& b) {
  Rational both = b_eval(bf, conjoin(a, b));
  return PairRelation{both == 0, both == b_eval(bf, a) * b_eval(bf, b)};
}

}  // namespace problogic
