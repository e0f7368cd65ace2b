#include "problogic/deduction.hpp"

#include <array>
#include <stdexcept>

namespace problogic {

namespace {

// Schema metavariables are atoms 0 (α), 1 (β), 2 (γ) of these pattern trees.
struct Schemata {
  std::array<Sentence, 3> pattern;

  Schemata()
      : pattern{
            implies(Sentence::atom(0), implies(Sentence::atom(1), Sentence::atom(0))),
            implies(implies(Sentence::atom(0), implies(Sentence::atom(1), Sentence::atom(2))),
                    implies(implies(Sentence::atom(0), Sentence::atom(1)),
                            implies(Sentence::atom(0), Sentence::atom(2)))),
            implies(implies(negate(Sentence::atom(1)), negate(Sentence::atom(0))),
                    implies(implies(negate(Sentence::atom(1)), Sentence::atom(0)), Sentence::atom(1))),
        } {}
};

const Schemata& schemata() {
  static const Schemata instance;
  return instance;
}

bool unify(const Sentence& pattern, const Sentence& s, std::array<std::optional<Sentence>, 3>& bound) {
  switch (pattern.kind()) {
    case Connective::Atom: {
      auto& slot = bound[pattern.atom_id()];
      if (!slot) {
        slot = s;
        return true;
      }
      return *slot == s;
    }
    case Connective::Not: return s.is_not() && unify(pattern.operand(), s.operand(), bound);
    case Connective::And:
      return s.is_and() && unify(pattern.left(), s.left(), bound) && unify(pattern.right(), s.right(), bound);
  }
  return false;
}

std::optional<std::vector<Sentence>> match(AxiomSchema schema, const Sentence& s) {
  std::array<std::optional<Sentence>, 3> bound;
  if (!unify(schemata().pattern[static_cast<std::size_t>(schema)], s, bound)) return std::nullopt;
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < arity(schema); ++i) out.push_back(*bound[i]);
  return out;
}

}  // namespace

const char* to_string(AxiomSchema schema) {
  switch (schema) {
    case AxiomSchema::A1: return "A1";
    case AxiomSchema::A2: return "A2";
    case AxiomSchema::A3: return "A3";
  }
  return "?";
}

std::size_t arity(AxiomSchema schema) { return schema == AxiomSchema::A2 ? 3 : 2; }

Sentence axiom_instance(AxiomSchema schema, std::span<const Sentence> bindings) {
  if (bindings.size() != arity(schema)) {
    throw std::invalid_argument(std::string("axiom ") + to_string(schema) + " takes " +
                                std::to_string(arity(schema)) + " bindings");
  }
  std::unordered_map<AtomId, Sentence> map;
  for (std::size_t i = 0; i < bindings.size(); ++i) map.emplace(static_cast<AtomId>(i), bindings[i]);
  return substitute(schemata().pattern[static_cast<std::size_t>(schema)], map);
}

std::optional<AxiomMatch> is_axiom_instance(const Sentence& s) {
  for (auto schema : {AxiomSchema::A1, AxiomSchema::A2, AxiomSchema::A3}) {
    if (auto bindings = match(schema, s)) return AxiomMatch{schema, std::move(*bindings)};
  }
  return std::nullopt;
}

const char* to_string(DeductionError error) {
  switch (error) {
    case DeductionError::EmptyDeduction: return "EmptyDeduction";
    case DeductionError::ForwardReference: return "ForwardReference";
    case DeductionError::MalformedJustification: return "MalformedJustification";
    case DeductionError::BadHypothesis: return "BadHypothesis";
    case DeductionError::NotAnAxiom: return "NotAnAxiom";
    case DeductionError::MpNotImplication: return "MpNotImplication";
    case DeductionError::MpMismatch: return "MpMismatch";
    case DeductionError::GoalMismatch: return "GoalMismatch";
  }
  return "?";
}

namespace {

DeductionReport reject(std::optional<std::size_t> line, DeductionError error, std::string message) {
  return DeductionReport{false, line, error, std::move(message)};
}

std::optional<DeductionReport> check_line(const Deduction& d, std::size_t number) {
  const DeductionLine& line = d.lines[number - 1];
  const std::string where = "line " + std::to_string(number) + ": ";

  if (const auto* ax = std::get_if<AxiomJustification>(&line.justification)) {
    if (!ax->bindings.empty()) {
      if (ax->bindings.size() != arity(ax->schema)) {
        return reject(number, DeductionError::MalformedJustification,
                      where + "wrong number of bindings for " + to_string(ax->schema));
      }
      if (axiom_instance(ax->schema, ax->bindings) != line.sentence) {
        return reject(number, DeductionError::NotAnAxiom,
                      where + "sentence is not the stated instance of " + to_string(ax->schema));
      }
      return std::nullopt;
    }
    if (!match(ax->schema, line.sentence)) {
      return reject(number, DeductionError::NotAnAxiom, where + "sentence does not match schema " + to_string(ax->schema));
    }
    return std::nullopt;
  }

  if (const auto* hyp = std::get_if<HypothesisJustification>(&line.justification)) {
    if (hyp->index >= d.hypotheses.size()) {
      return reject(number, DeductionError::BadHypothesis,
                    where + "hypothesis " + std::to_string(hyp->index) + " does not exist");
    }
    if (d.hypotheses[hyp->index] != line.sentence) {
      return reject(number, DeductionError::BadHypothesis,
                    where + "sentence differs from hypothesis " + std::to_string(hyp->index));
    }
    return std::nullopt;
  }

  const auto& mp = std::get<ModusPonensJustification>(line.justification);
  if (mp.major == 0 || mp.minor == 0) {
    return reject(number, DeductionError::MalformedJustification, where + "line numbers start at 1");
  }
  if (mp.major >= number || mp.minor >= number) {
    return reject(number, DeductionError::ForwardReference,
                  where + "modus ponens cites a line that is not strictly earlier");
  }
  auto imp = d.lines[mp.major - 1].sentence.as_implication();
  if (!imp) {
    return reject(number, DeductionError::MpNotImplication,
                  where + "line " + std::to_string(mp.major) + " is not an implication");
  }
  if (imp->first != d.lines[mp.minor - 1].sentence) {
    return reject(number, DeductionError::MpMismatch,
                  where + "line " + std::to_string(mp.minor) + " is not the antecedent of line " +
                      std::to_string(mp.major));
  }
  if (imp->second != line.sentence) {
    return reject(number, DeductionError::MpMismatch,
                  where + "sentence is not the consequent of line " + std::to_string(mp.major));
  }
  return std::nullopt;
}

}  // namespace

DeductionReport check_deduction(const Deduction& d) {
  if (d.lines.empty()) return reject(std::nullopt, DeductionError::EmptyDeduction, "deduction has no lines");
  for (std::size_t number = 1; number <= d.lines.size(); ++number) {
    if (auto failure = check_line(d, number)) return *failure;
  }
  if (d.lines.back().sentence != d.goal) {
    return reject(d.lines.size(), DeductionError::GoalMismatch, "last line is not the goal");
  }
  return DeductionReport{true, std::nullopt, std::nullopt, "accepted"};
}

}  // namespace problogic
