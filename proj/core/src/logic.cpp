#include "problogic/logic.hpp"

#include <algorithm>
#include <stdexcept>

namespace problogic {

Valuation Valuation::from_minterm(std::uint64_t minterm, std::size_t atoms) {
  if (atoms > 63) throw std::domain_error("valuation too wide for a minterm index");
  Valuation v;
  v.bits.resize(atoms);
  for (std::size_t i = 0; i < atoms; ++i) v.bits[i] = ((minterm >> (atoms - 1 - i)) & 1U) != 0;
  return v;
}

Valuation Valuation::parse(std::string_view bits) {
  Valuation v;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("valuation bits must be 0 or 1, got '" + std::string(bits) + "'");
    v.bits.push_back(c == '1');
  }
  return v;
}

std::uint64_t Valuation::minterm() const {
  std::uint64_t m = 0;
  for (bool b : bits) m = (m << 1) | (b ? 1U : 0U);
  return m;
}

std::string Valuation::to_string() const {
  std::string out;
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

bool eval(const Sentence& s, const Valuation& v) {
  switch (s.kind()) {
    case Connective::Atom:
      if (s.atom_id() >= v.size()) {
        throw std::domain_error("atom id " + std::to_string(s.atom_id()) + " outside a valuation of size " +
                                std::to_string(v.size()));
      }
      return v.bits[s.atom_id()];
    case Connective::Not: return !eval(s.operand(), v);
    case Connective::And: return eval(s.left(), v) && eval(s.right(), v);
  }
  throw std::logic_error("unreachable");
}

std::vector<TruthTable> joint_truth_tables(std::span<const Sentence> sentences) {
  std::vector<AtomId> atoms;
  for (const auto& s : sentences) {
    auto a = s.atoms();
    atoms.insert(atoms.end(), a.begin(), a.end());
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  auto var_of = [&atoms](AtomId id) {
    return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), id) - atoms.begin());
  };
  std::vector<TruthTable> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) out.push_back(TruthTable::of(s, atoms.size(), var_of));
  return out;
}

bool is_tautology(const Sentence& s) { return joint_truth_tables(std::span(&s, 1)).front().all(); }

bool is_satisfiable(const Sentence& s) { return !joint_truth_tables(std::span(&s, 1)).front().none(); }

bool semantic_equal(const Sentence& a, const Sentence& b) {
  const Sentence pair[] = {a, b};
  auto tables = joint_truth_tables(pair);
  return tables[0] == tables[1];
}

}  // namespace problogic
