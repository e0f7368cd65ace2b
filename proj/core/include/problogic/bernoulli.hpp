#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "problogic/bfunc.hpp"
#include "problogic/rational.hpp"
#include "problogic/sentence.hpp"

namespace problogic {

class BernoulliError : public std::runtime_error {
 public:
  enum class Kind { InvalidSequence, RangeViolation, EmptyRange, NotAtomic };
  BernoulliError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// The tests st(1)..st(r) with common success probability p.
class TestSequence {
 public:
  /// Throws BernoulliError(InvalidSequence) unless tests is nonempty and 0 <= p <= 1.
  TestSequence(std::vector<Sentence> tests, Rational p);

  /// st(n) = atom n-1 for n = 1..r, i.e. atoms X1..Xr of AtomTable::numbered("X", r).
  static TestSequence fresh_atoms(std::size_t r, Rational p);

  std::size_t size() const { return tests_.size(); }
  /// 1-based, as st(n).
  const Sentence& test(std::size_t n) const { return tests_.at(n - 1); }
  const std::vector<Sentence>& tests() const { return tests_; }
  const Rational& p() const { return p_; }

  /// True when every test is a distinct atom with id < size().
  bool is_atomic() const;

 private:
  std::vector<Sentence> tests_;
  Rational p_;
};

/// Integer bounds k = ⌈a⌉ and l = ⌊b⌋, clamped to [0, r].
struct RangeSpec {
  Rational a;
  Rational b;
  long k;
  long l;

  static RangeSpec derive(std::size_t r, const Rational& a, const Rational& b);
  bool empty() const { return k > l; }
};

/// The C(r,k) series of range r with exactly k positive tests, each a
/// left-nested conjunction st(1)^± ∧ … ∧ st(r)^±. Ordered lexicographically
/// by the positions of the positive tests.
std::vector<Sentence> enumerate_series(const TestSequence& ts, std::size_t r, std::size_t k);

/// Left-fold disjunction of enumerate_series(ts, r, k).
Sentence t_disjunction(const TestSequence& ts, std::size_t r, std::size_t k);

/// t(r,k) ∨ t(r,k+1) ∨ … ∨ t(r,l) for the derived range; throws EmptyRange when k > l.
Sentence t_range(const TestSequence& ts, std::size_t r, const Rational& a, const Rational& b);

/// Product measure over the test atoms: mass(w) = Π (p if X_n true else 1-p).
/// Requires ts.is_atomic().
BFunction product_bfunction(const TestSequence& ts);

/// Σ_{k in derived range} C(r,k) p^k (1-p)^{r-k}; zero for an empty range.
Rational range_prob(std::size_t r, const Rational& a, const Rational& b, const Rational& p);

/// 1 - p(1-p)/(r·eps²), unclamped.
Rational lln_bound(std::size_t r, const Rational& p, const Rational& eps);

/// Exact Bernoulli(p) draws from a 64-bit engine: a uniform U in [0,1) is
/// generated one 64-bit block at a time and compared with the binary
/// expansion of p, so P(U < p) = p for any rational p.
class BernoulliSampler {
 public:
  explicit BernoulliSampler(const Rational& p);

  template <typename Engine>
  bool operator()(Engine& engine) {
    if (certain_) return true;
    if (impossible_) return false;
    for (std::size_t i = 0;; ++i) {
      std::uint64_t u = engine();
      std::uint64_t d = digits(i);
      if (u != d) return u < d;
    }
  }

 private:
  std::uint64_t digits(std::size_t block);

  bool certain_ = false;
  bool impossible_ = false;
  std::vector<std::uint64_t> blocks_;
  Rational remainder_;
};

/// Engine for one trial, seeded from (seed, trial) through std::seed_seq.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// One sampled frequency k/r per trial, where k counts the tests that hold
/// in a world drawn from product_bfunction(ts). Trials are independent
/// streams, so the result does not depend on `threads`.
std::vector<Rational> simulate_frequencies(const TestSequence& ts, std::size_t trials, std::uint64_t seed,
                                           unsigned threads = 1);

}  // namespace problogic
