#include "problogic/proof_synthesis.hpp"

#include <algorithm>
#include <string>

#include "problogic/logic.hpp"

namespace problogic {

ProofBuilder::ProofBuilder(std::vector<Sentence> hypotheses) : hypotheses_(std::move(hypotheses)) {}

std::size_t ProofBuilder::add(Sentence s, Justification j) {
  if (auto it = line_of_.find(s); it != line_of_.end()) return it->second;
  lines_.push_back(DeductionLine{s, std::move(j)});
  line_of_.emplace(std::move(s), lines_.size());
  return lines_.size();
}

std::size_t ProofBuilder::axiom(AxiomSchema schema, std::vector<Sentence> bindings) {
  Sentence instance = axiom_instance(schema, bindings);
  return add(std::move(instance), AxiomJustification{schema, std::move(bindings)});
}

std::size_t ProofBuilder::hypothesis(std::size_t index) {
  return add(hypotheses_.at(index), HypothesisJustification{index});
}

std::size_t ProofBuilder::modus_ponens(std::size_t major, std::size_t minor) {
  auto imp = sentence(major).as_implication();
  if (!imp || imp->first != sentence(minor)) {
    throw std::logic_error("modus ponens on lines " + std::to_string(major) + " and " + std::to_string(minor) +
                           " does not apply");
  }
  return add(imp->second, ModusPonensJustification{major, minor});
}

std::size_t ProofBuilder::include(const Deduction& proof) {
  std::vector<std::size_t> mapped(proof.lines.size() + 1, 0);
  for (std::size_t i = 1; i <= proof.lines.size(); ++i) {
    const auto& line = proof.lines[i - 1];
    if (const auto* ax = std::get_if<AxiomJustification>(&line.justification)) {
      mapped[i] = add(line.sentence, *ax);
    } else if (const auto* hyp = std::get_if<HypothesisJustification>(&line.justification)) {
      const Sentence& h = proof.hypotheses.at(hyp->index);
      auto it = std::find(hypotheses_.begin(), hypotheses_.end(), h);
      if (it == hypotheses_.end()) throw std::logic_error("included proof uses a hypothesis the builder lacks");
      mapped[i] = hypothesis(static_cast<std::size_t>(it - hypotheses_.begin()));
    } else {
      const auto& mp = std::get<ModusPonensJustification>(line.justification);
      mapped[i] = modus_ponens(mapped[mp.major], mapped[mp.minor]);
    }
  }
  return mapped[proof.lines.size()];
}

Deduction ProofBuilder::finish(std::size_t goal_line) const {
  std::vector<bool> needed(lines_.size() + 1, false);
  needed[goal_line] = true;
  for (std::size_t i = goal_line; i >= 1; --i) {
    if (!needed[i]) continue;
    if (const auto* mp = std::get_if<ModusPonensJustification>(&lines_[i - 1].justification)) {
      needed[mp->major] = true;
      needed[mp->minor] = true;
    }
  }
  std::vector<std::size_t> renumber(lines_.size() + 1, 0);
  Deduction out{hypotheses_, {}, sentence(goal_line)};
  for (std::size_t i = 1; i <= goal_line; ++i) {
    if (!needed[i]) continue;
    DeductionLine line = lines_[i - 1];
    if (auto* mp = std::get_if<ModusPonensJustification>(&line.justification)) {
      mp->major = renumber[mp->major];
      mp->minor = renumber[mp->minor];
    }
    out.lines.push_back(std::move(line));
    renumber[i] = out.lines.size();
  }
  return out;
}

Deduction discharge(const Deduction& proof, std::size_t index) {
  const Sentence h = proof.hypotheses.at(index);
  std::vector<Sentence> rest = proof.hypotheses;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  ProofBuilder b(rest);

  const std::size_t n = proof.lines.size();
  std::vector<bool> depends(n + 1, false);
  std::vector<std::size_t> plain(n + 1, 0);   // line in b proving C_i
  std::vector<std::size_t> lifted(n + 1, 0);  // line in b proving H → C_i

  auto lift = [&](std::size_t i) {
    if (lifted[i] == 0) {
      const Sentence& c = proof.lines[i - 1].sentence;
      lifted[i] = b.modus_ponens(b.axiom(AxiomSchema::A1, {c, h}), plain[i]);
    }
    return lifted[i];
  };

  LemmaLibrary lemmas;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& line = proof.lines[i - 1];
    if (std::holds_alternative<AxiomJustification>(line.justification)) {
      plain[i] = b.include(Deduction{{}, {line}, line.sentence});
    } else if (const auto* hyp = std::get_if<HypothesisJustification>(&line.justification)) {
      if (hyp->index == index) {
        depends[i] = true;
        lifted[i] = b.include(lemmas.identity(h));
      } else {
        plain[i] = b.hypothesis(hyp->index < index ? hyp->index : hyp->index - 1);
      }
    } else {
      const auto& mp = std::get<ModusPonensJustification>(line.justification);
      if (!depends[mp.major] && !depends[mp.minor]) {
        plain[i] = b.modus_ponens(plain[mp.major], plain[mp.minor]);
        continue;
      }
      depends[i] = true;
      const Sentence& x = proof.lines[mp.minor - 1].sentence;
      std::size_t major = depends[mp.major] ? lifted[mp.major] : lift(mp.major);
      std::size_t minor = depends[mp.minor] ? lifted[mp.minor] : lift(mp.minor);
      std::size_t a2 = b.axiom(AxiomSchema::A2, {h, x, line.sentence});
      lifted[i] = b.modus_ponens(b.modus_ponens(a2, major), minor);
    }
  }
  return b.finish(depends[n] ? lifted[n] : lift(n));
}

template <typename Build>
const Deduction& LemmaLibrary::memo(int lemma, const Sentence& a, const Sentence& b, Build&& build) {
  Key key{lemma, a, b};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Deduction proof = build();
  return cache_.emplace(std::move(key), std::move(proof)).first->second;
}

const Deduction& LemmaLibrary::identity(const Sentence& b) {
  return memo(0, b, b, [&] {
    ProofBuilder p;
    Sentence bb = implies(b, b);
    std::size_t a2 = p.axiom(AxiomSchema::A2, {b, bb, b});
    std::size_t a1 = p.axiom(AxiomSchema::A1, {b, bb});
    std::size_t step = p.modus_ponens(a2, a1);
    return p.finish(p.modus_ponens(step, p.axiom(AxiomSchema::A1, {b, b})));
  });
}

const Deduction& LemmaLibrary::double_negation_elim(const Sentence& b) {
  return memo(1, b, b, [&] {
    Sentence nb = negate(b);
    Sentence nnb = negate(nb);
    ProofBuilder p({nnb});
    std::size_t a3 = p.axiom(AxiomSchema::A3, {nb, b});
    std::size_t id = p.include(identity(nb));
    std::size_t weak = p.modus_ponens(p.axiom(AxiomSchema::A1, {nnb, nb}), p.hypothesis(0));
    std::size_t step = p.modus_ponens(a3, weak);
    return discharge(p.finish(p.modus_ponens(step, id)), 0);
  });
}

const Deduction& LemmaLibrary::double_negation_intro(const Sentence& b) {
  return memo(2, b, b, [&] {
    Sentence nnnb = negate(negate(negate(b)));
    ProofBuilder p({b});
    std::size_t a3 = p.axiom(AxiomSchema::A3, {b, negate(negate(b))});
    std::size_t step = p.modus_ponens(a3, p.include(double_negation_elim(negate(b))));
    std::size_t weak = p.modus_ponens(p.axiom(AxiomSchema::A1, {b, nnnb}), p.hypothesis(0));
    return discharge(p.finish(p.modus_ponens(step, weak)), 0);
  });
}

const Deduction& LemmaLibrary::ex_falso(const Sentence& a, const Sentence& b) {
  return memo(3, a, b, [&] {
    Sentence na = negate(a);
    Sentence nb = negate(b);
    ProofBuilder p({na, a});
    std::size_t nb_a = p.modus_ponens(p.axiom(AxiomSchema::A1, {a, nb}), p.hypothesis(1));
    std::size_t nb_na = p.modus_ponens(p.axiom(AxiomSchema::A1, {na, nb}), p.hypothesis(0));
    std::size_t step = p.modus_ponens(p.axiom(AxiomSchema::A3, {a, b}), nb_na);
    return discharge(discharge(p.finish(p.modus_ponens(step, nb_a)), 1), 0);
  });
}

const Deduction& LemmaLibrary::contraposition_reverse(const Sentence& a, const Sentence& b) {
  return memo(4, a, b, [&] {
    ProofBuilder p({implies(negate(b), negate(a)), a});
    std::size_t step = p.modus_ponens(p.axiom(AxiomSchema::A3, {a, b}), p.hypothesis(0));
    std::size_t nb_a = p.modus_ponens(p.axiom(AxiomSchema::A1, {a, negate(b)}), p.hypothesis(1));
    return discharge(discharge(p.finish(p.modus_ponens(step, nb_a)), 1), 0);
  });
}

const Deduction& LemmaLibrary::contraposition(const Sentence& a, const Sentence& b) {
  return memo(5, a, b, [&] {
    Sentence ab = implies(a, b);
    ProofBuilder inner({ab, negate(negate(a))});
    std::size_t got_a = inner.modus_ponens(inner.include(double_negation_elim(a)), inner.hypothesis(1));
    std::size_t got_b = inner.modus_ponens(inner.hypothesis(0), got_a);
    std::size_t nnb = inner.modus_ponens(inner.include(double_negation_intro(b)), got_b);
    Deduction nna_nnb = discharge(inner.finish(nnb), 1);

    ProofBuilder p({ab});
    std::size_t lifted = p.include(nna_nnb);
    std::size_t flip = p.include(contraposition_reverse(negate(b), negate(a)));
    return discharge(p.finish(p.modus_ponens(flip, lifted)), 0);
  });
}

const Deduction& LemmaLibrary::implication_refutation(const Sentence& a, const Sentence& b) {
  return memo(6, a, b, [&] {
    Sentence ab = implies(a, b);
    ProofBuilder inner({a, ab});
    Deduction ab_b = discharge(inner.finish(inner.modus_ponens(inner.hypothesis(1), inner.hypothesis(0))), 1);

    ProofBuilder p({a});
    std::size_t lifted = p.include(ab_b);
    std::size_t flip = p.include(contraposition(ab, b));
    return discharge(p.finish(p.modus_ponens(flip, lifted)), 0);
  });
}

const Deduction& LemmaLibrary::case_split(const Sentence& a, const Sentence& b) {
  return memo(7, a, b, [&] {
    Sentence na = negate(a);
    ProofBuilder p({implies(a, b), implies(na, b)});
    std::size_t nb_na = p.modus_ponens(p.include(contraposition(a, b)), p.hypothesis(0));
    std::size_t nb_nna = p.modus_ponens(p.include(contraposition(na, b)), p.hypothesis(1));
    std::size_t step = p.modus_ponens(p.axiom(AxiomSchema::A3, {na, b}), nb_nna);
    return discharge(discharge(p.finish(p.modus_ponens(step, nb_na)), 1), 0);
  });
}

const char* to_string(SynthesisError::Kind kind) {
  switch (kind) {
    case SynthesisError::Kind::NotTautology: return "NotTautology";
    case SynthesisError::Kind::NotDerivable: return "NotDerivable";
    case SynthesisError::Kind::TooManyAtoms: return "TooManyAtoms";
  }
  return "?";
}

namespace {

bool is_opaque(const Sentence& s) { return s.is_atom() || (s.is_and() && !s.right().is_not()); }

void collect_opaque(const Sentence& s, std::vector<Sentence>& out) {
  if (is_opaque(s)) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return;
  }
  if (s.is_not()) {
    collect_opaque(s.operand(), out);
    return;
  }
  collect_opaque(s.left(), out);
  collect_opaque(s.right().operand(), out);
}

bool opaque_value(const Sentence& s, const std::vector<Sentence>& units, std::uint64_t assignment) {
  if (is_opaque(s)) {
    auto pos = static_cast<std::size_t>(std::find(units.begin(), units.end(), s) - units.begin());
    return ((assignment >> pos) & 1U) != 0;
  }
  if (s.is_not()) return !opaque_value(s.operand(), units, assignment);
  return opaque_value(s.left(), units, assignment) && !opaque_value(s.right().operand(), units, assignment);
}

bool all_assignments_hold(const Sentence& s, const std::vector<Sentence>& units) {
  const std::uint64_t rows = std::uint64_t{1} << units.size();
  for (std::uint64_t a = 0; a < rows; ++a)
    if (!opaque_value(s, units, a)) return false;
  return true;
}

// Derives, from the opaque-unit literals in `hyps`, the literal of `s`
// that is true under `assignment`.
class LiteralDeriver {
 public:
  LiteralDeriver(ProofBuilder& b, LemmaLibrary& lemmas, const std::vector<Sentence>& units, std::uint64_t assignment)
      : b_(b), lemmas_(lemmas), units_(units), assignment_(assignment) {}

  std::size_t derive(const Sentence& s) {
    if (is_opaque(s)) {
      auto pos = static_cast<std::size_t>(std::find(units_.begin(), units_.end(), s) - units_.begin());
      return b_.hypothesis(pos);
    }
    if (auto imp = s.as_implication()) {
      const auto& [x, y] = *imp;
      bool vx = value(x);
      bool vy = value(y);
      if (!vx) return b_.modus_ponens(b_.include(lemmas_.ex_falso(x, y)), derive(x));
      if (vy) return b_.modus_ponens(b_.axiom(AxiomSchema::A1, {y, x}), derive(y));
      std::size_t step = b_.modus_ponens(b_.include(lemmas_.implication_refutation(x, y)), derive(x));
      return b_.modus_ponens(step, derive(y));
    }
    if (s.is_not()) {
      const Sentence z = s.operand();
      std::size_t lz = derive(z);
      if (!value(z)) return lz;
      return b_.modus_ponens(b_.include(lemmas_.double_negation_intro(z)), lz);
    }
    // s = X ∧ ¬Y; its negation is the implication X → Y.
    std::size_t negated = derive(negate(s));
    if (!value(s)) return negated;
    return b_.modus_ponens(b_.include(lemmas_.double_negation_elim(s)), negated);
  }

 private:
  bool value(const Sentence& s) const { return opaque_value(s, units_, assignment_); }

  ProofBuilder& b_;
  LemmaLibrary& lemmas_;
  const std::vector<Sentence>& units_;
  std::uint64_t assignment_;
};

// Proves `goal` from literals of units[0..fixed) chosen by `assignment`.
Deduction kalmar(const Sentence& goal, const std::vector<Sentence>& units, std::uint64_t assignment, std::size_t fixed,
                 LemmaLibrary& lemmas) {
  std::vector<Sentence> hyps;
  for (std::size_t i = 0; i < fixed; ++i) {
    hyps.push_back(((assignment >> i) & 1U) ? units[i] : negate(units[i]));
  }
  if (fixed == units.size()) {
    ProofBuilder b(hyps);
    LiteralDeriver deriver(b, lemmas, units, assignment);
    return b.finish(deriver.derive(goal));
  }
  const Sentence& p = units[fixed];
  Deduction when_true = discharge(kalmar(goal, units, assignment | (std::uint64_t{1} << fixed), fixed + 1, lemmas), fixed);
  Deduction when_false = discharge(kalmar(goal, units, assignment, fixed + 1, lemmas), fixed);

  ProofBuilder b(hyps);
  std::size_t pos = b.include(when_true);
  std::size_t neg = b.include(when_false);
  std::size_t split = b.include(lemmas.case_split(p, goal));
  return b.finish(b.modus_ponens(b.modus_ponens(split, pos), neg));
}

}  // namespace

std::vector<Sentence> opaque_units(const Sentence& s) {
  std::vector<Sentence> out;
  collect_opaque(s, out);
  return out;
}

bool is_derivable(const Sentence& s) {
  auto units = opaque_units(s);
  if (units.size() > kMaxAtoms) throw std::domain_error("too many opaque units to enumerate");
  return all_assignments_hold(s, units);
}

Deduction synthesize_proof(const Sentence& s) {
  if (!is_tautology(s)) throw SynthesisError(SynthesisError::Kind::NotTautology, "sentence is not a tautology");
  if (s.atoms().size() > kMaxSynthesisAtoms) {
    throw SynthesisError(SynthesisError::Kind::TooManyAtoms,
                         "proof synthesis is limited to " + std::to_string(kMaxSynthesisAtoms) + " distinct atoms");
  }
  auto units = opaque_units(s);
  if (units.size() <= kMaxAtoms && !all_assignments_hold(s, units)) {
    throw SynthesisError(SynthesisError::Kind::NotDerivable,
                         "tautology depends on the inside of a conjunction that the axioms treat as a unit");
  }
  if (units.size() > kMaxSynthesisAtoms) {
    throw SynthesisError(SynthesisError::Kind::TooManyAtoms,
                         "proof synthesis is limited to " + std::to_string(kMaxSynthesisAtoms) + " opaque units");
  }
  LemmaLibrary lemmas;
  return kalmar(s, units, 0, 0, lemmas);
}

}  // namespace problogic
