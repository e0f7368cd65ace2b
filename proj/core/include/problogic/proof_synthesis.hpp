#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "problogic/deduction.hpp"
#include "problogic/sentence.hpp"

namespace problogic {

/// Incremental construction of a Deduction. Adding a sentence that already
/// has a line returns the existing line number instead of duplicating it.
/// Line numbers are 1-based, as in Deduction.
class ProofBuilder {
 public:
  explicit ProofBuilder(std::vector<Sentence> hypotheses = {});

  std::size_t axiom(AxiomSchema schema, std::vector<Sentence> bindings);
  std::size_t hypothesis(std::size_t index);
  /// Throws std::logic_error if `major` does not prove `minor` → Y.
  std::size_t modus_ponens(std::size_t major, std::size_t minor);
  /// Appends the lines of `proof`, mapping its hypotheses onto ours by
  /// sentence. Returns the line proving proof's last sentence.
  std::size_t include(const Deduction& proof);

  const Sentence& sentence(std::size_t line) const { return lines_.at(line - 1).sentence; }
  std::size_t size() const { return lines_.size(); }
  const std::vector<Sentence>& hypotheses() const { return hypotheses_; }

  /// The lines `goal_line` depends on, renumbered, ending with `goal_line`.
  Deduction finish(std::size_t goal_line) const;

 private:
  std::size_t add(Sentence s, Justification j);

  std::vector<Sentence> hypotheses_;
  std::vector<DeductionLine> lines_;
  std::unordered_map<Sentence, std::size_t, SentenceHash> line_of_;
};

/// Deduction theorem: from Γ, H ⊢ C (H = hypotheses[index]) builds Γ ⊢ H → C.
Deduction discharge(const Deduction& proof, std::size_t index);

/// Closed proofs of the derived schemata used by Kalmár's construction.
/// Instances are memoized, so one object should serve one synthesis run.
class LemmaLibrary {
 public:
  /// ⊢ B → B
  const Deduction& identity(const Sentence& b);
  /// ⊢ ¬¬B → B
  const Deduction& double_negation_elim(const Sentence& b);
  /// ⊢ B → ¬¬B
  const Deduction& double_negation_intro(const Sentence& b);
  /// ⊢ ¬A → (A → B)
  const Deduction& ex_falso(const Sentence& a, const Sentence& b);
  /// ⊢ (¬B → ¬A) → (A → B)
  const Deduction& contraposition_reverse(const Sentence& a, const Sentence& b);
  /// ⊢ (A → B) → (¬B → ¬A)
  const Deduction& contraposition(const Sentence& a, const Sentence& b);
  /// ⊢ A → (¬B → ¬(A → B))
  const Deduction& implication_refutation(const Sentence& a, const Sentence& b);
  /// ⊢ (A → B) → ((¬A → B) → B)
  const Deduction& case_split(const Sentence& a, const Sentence& b);

 private:
  struct Key {
    int lemma;
    Sentence a;
    Sentence b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return (k.a.hash() * 31 + k.b.hash()) * 31 + static_cast<std::size_t>(k.lemma);
    }
  };

  template <typename Build>
  const Deduction& memo(int lemma, const Sentence& a, const Sentence& b, Build&& build);

  std::unordered_map<Key, Deduction, KeyHash> cache_;
};

class SynthesisError : public std::runtime_error {
 public:
  enum class Kind {
    NotTautology,
    /// A tautology that no A1-A3/modus ponens deduction reaches (see is_derivable).
    NotDerivable,
    TooManyAtoms,
  };
  SynthesisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(SynthesisError::Kind kind);

/// Largest number of distinct atoms (and of opaque conjunctions) accepted by synthesize_proof.
inline constexpr std::size_t kMaxSynthesisAtoms = 6;

/// Subterms that the axioms see only as indivisible units: atoms and
/// conjunctions X∧Y whose right conjunct is not a negation. Every other
/// node is read as ¬ or as an implication ¬(X∧¬Y).
std::vector<Sentence> opaque_units(const Sentence& s);

/// True iff `s` holds when its opaque units are assigned truth values
/// independently. These are exactly the sentences with an A1-A3 deduction:
/// e.g. (A∧B)→A is a tautology but is not derivable, because the axioms
/// never inspect the inside of the bare conjunction A∧B.
bool is_derivable(const Sentence& s);

/// Hypothesis-free deduction of `s` via Kalmár's construction: one literal
/// derivation per assignment of the opaque units, with hypotheses removed
/// by the deduction theorem. Throws SynthesisError.
Deduction synthesize_proof(const Sentence& s);

}  // namespace problogic
