#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "problogic/bfunc.hpp"
#include "problogic/rational.hpp"
#include "problogic/sentence.hpp"

namespace problogic::gen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline bool coin(Rng& rng) { return pick(rng, 2) == 1; }

/// Random sentence over atoms 0..atoms-1 with depth at most `depth` (atom depth 1).
inline Sentence random_sentence(Rng& rng, std::size_t atoms, std::size_t depth) {
  if (depth <= 1 || pick(rng, 4) == 0) return Sentence::atom(static_cast<AtomId>(pick(rng, atoms)));
  std::size_t op = pick(rng, 5);
  if (depth < 4 && op >= 2) op = 1;
  switch (op) {
    case 0:
      return negate(random_sentence(rng, atoms, depth - 1));
    case 1:
      return conjoin(random_sentence(rng, atoms, depth - 1), random_sentence(rng, atoms, depth - 1));
    case 2:
      return disjoin(random_sentence(rng, atoms, depth - 3), random_sentence(rng, atoms, depth - 3));
    default:
      return implies(random_sentence(rng, atoms, depth - 3), random_sentence(rng, atoms, depth - 3));
  }
}

/// Measure with small integer weights, some of them zero.
inline BFunction random_bfunction(Rng& rng, std::size_t atoms) {
  std::size_t rows = std::size_t{1} << atoms;
  std::vector<unsigned long> weights(rows);
  unsigned long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = pick(rng, 3) == 0 ? 0 : 1 + pick(rng, 12);
      total += w;
    }
  }
  std::vector<Rational> masses;
  for (auto w : weights) masses.push_back(ratio(Integer(w), Integer(total)));
  return BFunction(atoms, std::move(masses));
}

inline Rational random_rational(Rng& rng, long span = 9) {
  long num = static_cast<long>(pick(rng, static_cast<std::size_t>(2 * span + 1))) - span;
  long den = 1 + static_cast<long>(pick(rng, static_cast<std::size_t>(span)));
  return ratio(Integer(num), Integer(den));
}

/// Every sentence over `atoms` atoms with depth at most `depth`.
inline std::vector<Sentence> all_sentences(std::size_t atoms, std::size_t depth) {
  std::vector<Sentence> level;
  for (std::size_t i = 0; i < atoms; ++i) level.push_back(Sentence::atom(static_cast<AtomId>(i)));
  for (std::size_t d = 2; d <= depth; ++d) {
    std::vector<Sentence> next;
    for (std::size_t i = 0; i < atoms; ++i) next.push_back(Sentence::atom(static_cast<AtomId>(i)));
    for (const auto& s : level) next.push_back(negate(s));
    for (const auto& a : level) {
      for (const auto& b : level) next.push_back(conjoin(a, b));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace problogic::gen
