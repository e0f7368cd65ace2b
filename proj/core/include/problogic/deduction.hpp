#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "problogic/sentence.hpp"

namespace problogic {

/// Hilbert-system axiom schemata over → and ¬:
///   A1  α → (β → α)
///   A2  (α → (β → γ)) → ((α → β) → (α → γ))
///   A3  (¬β → ¬α) → ((¬β → α) → β)
enum class AxiomSchema { A1, A2, A3 };

const char* to_string(AxiomSchema schema);

struct AxiomMatch {
  AxiomSchema schema;
  /// Metavariable bindings in the order α, β, γ (γ only for A2).
  std::vector<Sentence> bindings;
};

/// Number of metavariables a schema uses.
std::size_t arity(AxiomSchema schema);

/// Instantiates a schema. Throws std::invalid_argument on a wrong binding count.
Sentence axiom_instance(AxiomSchema schema, std::span<const Sentence> bindings);

/// First schema (in order A1, A2, A3) that `s` instantiates, with the witnessing bindings.
std::optional<AxiomMatch> is_axiom_instance(const Sentence& s);

struct AxiomJustification {
  AxiomSchema schema;
  /// Optional explicit bindings; when empty the checker infers them by matching.
  std::vector<Sentence> bindings;
};

struct HypothesisJustification {
  /// 0-based index into Deduction::hypotheses.
  std::size_t index;
};

struct ModusPonensJustification {
  /// 1-based line numbers: `major` proves X→Y, `minor` proves X.
  std::size_t major;
  std::size_t minor;
};

using Justification = std::variant<AxiomJustification, HypothesisJustification, ModusPonensJustification>;

struct DeductionLine {
  Sentence sentence;
  Justification justification;
};

/// A propositional deduction of `goal` from `hypotheses`. Lines are numbered from 1.
struct Deduction {
  std::vector<Sentence> hypotheses;
  std::vector<DeductionLine> lines;
  Sentence goal;
};

enum class DeductionError {
  EmptyDeduction,
  ForwardReference,
  MalformedJustification,
  BadHypothesis,
  NotAnAxiom,
  MpNotImplication,
  MpMismatch,
  GoalMismatch,
};

const char* to_string(DeductionError error);

struct DeductionReport {
  bool accepted = false;
  /// 1-based number of the first failing line (absent for whole-deduction errors).
  std::optional<std::size_t> line;
  std::optional<DeductionError> error;
  std::string message;
};

/// Verifies every line's justification and that the last line is the goal.
DeductionReport check_deduction(const Deduction& d);

}  // namespace problogic
