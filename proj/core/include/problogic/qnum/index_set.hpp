#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "problogic/qnum/verdict.hpp"
#include "problogic/rational.hpp"

namespace problogic::qnum {

/// A subset of the positive integers. Finite, cofinite and eventually
/// periodic sets have an exactly known limit density; an opaque set is only
/// a membership predicate.
class IndexSet {
 public:
  enum class Kind { Finite, Cofinite, EventuallyPeriodic, Opaque };

  /// Members must be >= 1; they are sorted and deduplicated.
  static IndexSet finite(std::vector<std::uint64_t> members);
  /// Everything except `excluded`.
  static IndexSet cofinite(std::vector<std::uint64_t> excluded);
  /// n <= preamble.size(): preamble[n-1]; afterwards period repeats. Throws
  /// std::invalid_argument on an empty period.
  static IndexSet periodic(std::vector<bool> preamble, std::vector<bool> period);
  static IndexSet opaque(std::function<bool(std::uint64_t)> predicate);

  static IndexSet all() { return cofinite({}); }
  static IndexSet none() { return finite({}); }
  /// Multiples of `step` (step >= 1).
  static IndexSet multiples(std::uint64_t step);

  Kind kind() const { return kind_; }
  bool decidable() const { return kind_ != Kind::Opaque; }
  bool contains(std::uint64_t n) const;

  /// Limit density |A ∩ {1..n}| / n as n → ∞, when the kind determines it.
  std::optional<Rational> density() const;

  /// For Finite the members, for Cofinite the excluded indices.
  const std::vector<std::uint64_t>& listed() const { return listed_; }
  const std::vector<bool>& preamble() const { return preamble_; }
  const std::vector<bool>& period() const { return period_; }

  IndexSet complement() const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet unite(const IndexSet& other) const;

 private:
  IndexSet() = default;
  /// Same set as preamble/period; requires decidable().
  IndexSet as_periodic() const;
  static IndexSet combine(const IndexSet& a, const IndexSet& b, bool (*op)(bool, bool));

  Kind kind_ = Kind::Finite;
  std::vector<std::uint64_t> listed_;
  std::vector<bool> preamble_;
  std::vector<bool> period_;
  std::function<bool(std::uint64_t)> predicate_;
};

/// |A ∩ {1..n}| / n. Throws std::invalid_argument when n = 0.
Rational part_frequency(const IndexSet& a, std::uint64_t n);

/// Membership in the filter of sets whose frequency tends to 1: Cofinite
/// yes, Finite no, EventuallyPeriodic yes iff its period is all ones,
/// Opaque unknown with the frequency at `horizon`.
Verdict filter_membership(const IndexSet& a, std::uint64_t horizon = kDefaultHorizon);

}  // namespace problogic::qnum
