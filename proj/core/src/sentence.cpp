#include "problogic/sentence.hpp"

#include <algorithm>
#include <stdexcept>

namespace problogic {

AtomTable::AtomTable(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw std::invalid_argument("duplicate atom name '" + n + "'");
    intern(n);
  }
}

AtomTable AtomTable::numbered(std::string_view prefix, std::size_t count) {
  AtomTable table;
  for (std::size_t i = 1; i <= count; ++i) table.intern(std::string(prefix) + std::to_string(i));
  return table;
}

AtomId AtomTable::intern(std::string_view name) {
  if (auto id = find(name)) return *id;
  auto id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& AtomTable::name(AtomId id) const {
  if (id >= names_.size()) throw std::out_of_range("atom id " + std::to_string(id) + " outside the basic set");
  return names_[id];
}

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Sentence Sentence::atom(AtomId id) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Atom;
  node->atom = id;
  node->hash = mix(0x51ed270b, id);
  return Sentence(std::move(node));
}

Sentence negate(const Sentence& a) {
  auto node = std::make_shared<Sentence::Node>();
  node->kind = Connective::Not;
  node->left = a.node_;
  node->hash = mix(0x2545f491, a.hash());
  node->size = a.size() + 1;
  node->depth = a.depth() + 1;
  return Sentence(std::move(node));
}

Sentence conjoin(const Sentence& a, const Sentence& b) {
  auto node = std::make_shared<Sentence::Node>();
  node->kind = Connective::And;
  node->left = a.node_;
  node->right = b.node_;
  node->hash = mix(mix(0x7f4a7c15, a.hash()), b.hash());
  node->size = a.size() + b.size() + 1;
  node->depth = std::max(a.depth(), b.depth()) + 1;
  return Sentence(std::move(node));
}

Sentence disjoin(const Sentence& a, const Sentence& b) { return negate(conjoin(negate(a), negate(b))); }

Sentence implies(const Sentence& a, const Sentence& b) { return negate(conjoin(a, negate(b))); }

Sentence conjoin_all(const std::vector<Sentence>& parts) {
  if (parts.empty()) throw std::invalid_argument("conjoin_all: empty list");
  Sentence out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conjoin(out, parts[i]);
  return out;
}

Sentence disjoin_all(const std::vector<Sentence>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoin_all: empty list");
  Sentence out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disjoin(out, parts[i]);
  return out;
}

std::optional<std::pair<Sentence, Sentence>> Sentence::as_implication() const {
  if (!is_not()) return std::nullopt;
  Sentence body = operand();
  if (!body.is_and() || !body.right().is_not()) return std::nullopt;
  return std::make_pair(body.left(), body.right().operand());
}

std::optional<std::pair<Sentence, Sentence>> Sentence::as_disjunction() const {
  if (!is_not()) return std::nullopt;
  Sentence body = operand();
  if (!body.is_and() || !body.left().is_not() || !body.right().is_not()) return std::nullopt;
  return std::make_pair(body.left().operand(), body.right().operand());
}

std::vector<AtomId> Sentence::atoms() const {
  std::vector<AtomId> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    switch (n->kind) {
      case Connective::Atom: out.push_back(n->atom); break;
      case Connective::Not: stack.push_back(n->left.get()); break;
      case Connective::And:
        stack.push_back(n->left.get());
        stack.push_back(n->right.get());
        break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Sentence::equal_nodes(const Node* a, const Node* b) {
  while (true) {
    if (a == b) return true;
    if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
    switch (a->kind) {
      case Connective::Atom: return a->atom == b->atom;
      case Connective::Not:
        a = a->left.get();
        b = b->left.get();
        break;
      case Connective::And:
        if (!equal_nodes(a->left.get(), b->left.get())) return false;
        a = a->right.get();
        b = b->right.get();
        break;
    }
  }
}

bool Sentence::operator==(const Sentence& other) const { return equal_nodes(node_.get(), other.node_.get()); }

Sentence substitute(const Sentence& s, const std::unordered_map<AtomId, Sentence>& bindings) {
  switch (s.kind()) {
    case Connective::Atom: {
      auto it = bindings.find(s.atom_id());
      return it == bindings.end() ? s : it->second;
    }
    case Connective::Not: return negate(substitute(s.operand(), bindings));
    case Connective::And: return conjoin(substitute(s.left(), bindings), substitute(s.right(), bindings));
  }
  return s;
}

}  // namespace problogic
