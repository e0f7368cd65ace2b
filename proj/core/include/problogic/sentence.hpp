#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace problogic {

using AtomId = std::uint32_t;

/// Upper bound on the size of a basic set handled by exhaustive enumeration.
inline constexpr std::size_t kMaxAtoms = 20;

/// A finite basic set: atom names with dense ids 0..n-1.
class AtomTable {
 public:
  AtomTable() = default;
  explicit AtomTable(const std::vector<std::string>& names);

  /// Atoms named `<prefix>1` .. `<prefix><count>`.
  static AtomTable numbered(std::string_view prefix, std::size_t count);

  /// Returns the id of `name`, adding it if it is new.
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId id) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> ids_;
};

enum class Connective : std::uint8_t { Atom, Not, And };

/// Immutable propositional sentence over negation and conjunction.
///
/// Disjunction and implication are not node kinds: `disjoin` and `implies`
/// build ¬(¬A∧¬B) and ¬(A∧¬B) directly. Nodes are shared, so copying a
/// Sentence is cheap and structural equality short-circuits on identity.
class Sentence {
 public:
  static Sentence atom(AtomId id);

  Connective kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_not() const { return kind() == Connective::Not; }
  bool is_and() const { return kind() == Connective::And; }

  /// Precondition: is_atom().
  AtomId atom_id() const { return node_->atom; }
  /// Operand of a negation.
  Sentence operand() const { return Sentence(node_->left); }
  Sentence left() const { return Sentence(node_->left); }
  Sentence right() const { return Sentence(node_->right); }

  /// (X, Y) when this sentence is ¬(X∧¬Y), i.e. X→Y.
  std::optional<std::pair<Sentence, Sentence>> as_implication() const;
  /// (X, Y) when this sentence is ¬(¬X∧¬Y), i.e. X∨Y.
  std::optional<std::pair<Sentence, Sentence>> as_disjunction() const;

  std::size_t hash() const { return node_->hash; }
  /// Number of nodes.
  std::size_t size() const { return node_->size; }
  /// Tree height; an atom has depth 1.
  std::size_t depth() const { return node_->depth; }

  /// Sorted, duplicate-free ids of the atoms occurring in the sentence.
  std::vector<AtomId> atoms() const;

  bool operator==(const Sentence& other) const;
  bool operator!=(const Sentence& other) const { return !(*this == other); }

 private:
  struct Node {
    Connective kind;
    AtomId atom = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 1;
  };

  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal_nodes(const Node* a, const Node* b);

  friend Sentence negate(const Sentence& a);
  friend Sentence conjoin(const Sentence& a, const Sentence& b);

  std::shared_ptr<const Node> node_;
};

Sentence negate(const Sentence& a);
Sentence conjoin(const Sentence& a, const Sentence& b);
/// ¬(¬a ∧ ¬b)
Sentence disjoin(const Sentence& a, const Sentence& b);
/// ¬(a ∧ ¬b)
Sentence implies(const Sentence& a, const Sentence& b);

/// Left-nested conjunction / disjunction of a nonempty list.
Sentence conjoin_all(const std::vector<Sentence>& parts);
Sentence disjoin_all(const std::vector<Sentence>& parts);

struct SentenceHash {
  std::size_t operator()(const Sentence& s) const noexcept { return s.hash(); }
};

/// Replaces atoms by sentences; atoms without a binding are kept.
Sentence substitute(const Sentence& s, const std::unordered_map<AtomId, Sentence>& bindings);

}  // namespace problogic
