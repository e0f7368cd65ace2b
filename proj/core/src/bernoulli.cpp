#include "problogic/bernoulli.hpp"

#include <algorithm>
#include <thread>

namespace problogic {

TestSequence::TestSequence(std::vector<Sentence> tests, Rational p) : tests_(std::move(tests)), p_(std::move(p)) {
  if (tests_.empty()) throw BernoulliError(BernoulliError::Kind::InvalidSequence, "a test sequence needs r >= 1");
  if (p_ < 0 || p_ > 1) {
    throw BernoulliError(BernoulliError::Kind::InvalidSequence, "success probability " + to_string(p_) + " outside [0,1]");
  }
}

TestSequence TestSequence::fresh_atoms(std::size_t r, Rational p) {
  std::vector<Sentence> tests;
  for (std::size_t i = 0; i < r; ++i) tests.push_back(Sentence::atom(static_cast<AtomId>(i)));
  return TestSequence(std::move(tests), std::move(p));
}

bool TestSequence::is_atomic() const {
  std::vector<bool> used(tests_.size(), false);
  for (const auto& t : tests_) {
    if (!t.is_atom() || t.atom_id() >= tests_.size() || used[t.atom_id()]) return false;
    used[t.atom_id()] = true;
  }
  return true;
}

RangeSpec RangeSpec::derive(std::size_t r, const Rational& a, const Rational& b) {
  Integer k, l;
  mpz_cdiv_q(k.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(l.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  const Integer top(static_cast<unsigned long>(r));
  if (k < 0) k = 0;
  if (l > top) l = top;
  // Clamp far-out bounds so they fit in a long while keeping k > l when empty.
  if (k > top) k = top + 1;
  if (l < 0) l = -1;
  return RangeSpec{a, b, k.get_si(), l.get_si()};
}

namespace {

void check_range(const TestSequence& ts, std::size_t r, std::size_t k) {
  if (r < 1 || r > ts.size()) {
    throw BernoulliError(BernoulliError::Kind::RangeViolation,
                         "range r=" + std::to_string(r) + " outside 1.." + std::to_string(ts.size()));
  }
  if (k > r) {
    throw BernoulliError(BernoulliError::Kind::RangeViolation,
                         "V-number k=" + std::to_string(k) + " outside 0.." + std::to_string(r));
  }
}

}  // namespace

std::vector<Sentence> enumerate_series(const TestSequence& ts, std::size_t r, std::size_t k) {
  check_range(ts, r, k);
  std::vector<Sentence> out;
  // Positive positions as a k-combination of 0..r-1, advanced lexicographically.
  std::vector<std::size_t> chosen(k);
  for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
  while (true) {
    std::vector<bool> positive(r, false);
    for (auto c : chosen) positive[c] = true;
    std::vector<Sentence> literals;
    for (std::size_t n = 0; n < r; ++n) literals.push_back(positive[n] ? ts.tests()[n] : negate(ts.tests()[n]));
    out.push_back(conjoin_all(literals));

    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == r - k + (i - 1)) --i;
    if (i == 0) break;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return out;
}

Sentence t_disjunction(const TestSequence& ts, std::size_t r, std::size_t k) {
  return disjoin_all(enumerate_series(ts, r, k));
}

Sentence t_range(const TestSequence& ts, std::size_t r, const Rational& a, const Rational& b) {
  check_range(ts, r, 0);
  RangeSpec range = RangeSpec::derive(r, a, b);
  if (range.empty()) {
    throw BernoulliError(BernoulliError::Kind::EmptyRange,
                         "range [" + to_string(a) + ", " + to_string(b) + "] contains no V-number in 0.." +
                             std::to_string(r));
  }
  Sentence out = t_disjunction(ts, r, static_cast<std::size_t>(range.k));
  for (long l = range.k + 1; l <= range.l; ++l) out = disjoin(out, t_disjunction(ts, r, static_cast<std::size_t>(l)));
  return out;
}

BFunction product_bfunction(const TestSequence& ts) {
  if (!ts.is_atomic()) {
    throw BernoulliError(BernoulliError::Kind::NotAtomic, "product measure needs st(n) to be distinct fresh atoms");
  }
  const std::size_t r = ts.size();
  if (r > kMaxAtoms) throw BernoulliError(BernoulliError::Kind::RangeViolation, "too many tests for a product measure");
  const Rational q = 1 - ts.p();
  std::vector<Rational> masses(std::size_t{1} << r);
  for (std::uint64_t w = 0; w < masses.size(); ++w) {
    Valuation v = Valuation::from_minterm(w, r);
    Rational m = 1;
    for (std::size_t n = 0; n < r; ++n) m *= v.bits[ts.tests()[n].atom_id()] ? ts.p() : q;
    masses[w] = m;
  }
  return BFunction(r, std::move(masses));
}

Rational range_prob(std::size_t r, const Rational& a, const Rational& b, const Rational& p) {
  if (r < 1) throw BernoulliError(BernoulliError::Kind::RangeViolation, "range_prob needs r >= 1");
  if (p < 0 || p > 1) throw BernoulliError(BernoulliError::Kind::InvalidSequence, "p outside [0,1]");
  RangeSpec range = RangeSpec::derive(r, a, b);
  if (range.empty()) return 0;

  // With p = u/q every term is C(r,k) u^k (q-u)^(r-k) / q^r.
  const Integer& u = p.get_num();
  const Integer& q = p.get_den();
  const Integer v = q - u;
  Integer numerator = 0, uk, vk, term;
  Integer coefficient = binomial(r, static_cast<unsigned long>(range.k));
  for (long k = range.k; k <= range.l; ++k) {
    const auto ku = static_cast<unsigned long>(k);
    mpz_pow_ui(uk.get_mpz_t(), u.get_mpz_t(), ku);
    mpz_pow_ui(vk.get_mpz_t(), v.get_mpz_t(), r - ku);
    term = coefficient * uk * vk;
    numerator += term;
    coefficient = coefficient * static_cast<unsigned long>(r - ku) / static_cast<unsigned long>(ku + 1);
  }
  Integer denominator;
  mpz_pow_ui(denominator.get_mpz_t(), q.get_mpz_t(), r);
  return ratio(numerator, denominator);
}

Rational lln_bound(std::size_t r, const Rational& p, const Rational& eps) {
  if (r < 1) throw BernoulliError(BernoulliError::Kind::RangeViolation, "lln_bound needs r >= 1");
  if (eps <= 0) throw BernoulliError(BernoulliError::Kind::RangeViolation, "lln_bound needs eps > 0");
  if (p < 0 || p > 1) throw BernoulliError(BernoulliError::Kind::InvalidSequence, "p outside [0,1]");
  return 1 - p * (1 - p) / (Rational(static_cast<unsigned long>(r)) * eps * eps);
}

BernoulliSampler::BernoulliSampler(const Rational& p) {
  if (p < 0 || p > 1) throw BernoulliError(BernoulliError::Kind::InvalidSequence, "p outside [0,1]");
  certain_ = p == 1;
  impossible_ = p == 0;
  remainder_ = p;
}

std::uint64_t BernoulliSampler::digits(std::size_t block) {
  while (blocks_.size() <= block) {
    // Next 64 binary digits of the remainder, which lies in [0,1).
    Rational scaled = remainder_ * Rational(Integer(1) << 64);
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    remainder_ = scaled - whole;
    std::uint64_t d = 0;
    mpz_export(&d, nullptr, -1, sizeof(d), 0, 0, whole.get_mpz_t());
    blocks_.push_back(d);
  }
  return blocks_[block];
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Rational> simulate_frequencies(const TestSequence& ts, std::size_t trials, std::uint64_t seed,
                                           unsigned threads) {
  if (trials < 1) throw BernoulliError(BernoulliError::Kind::RangeViolation, "simulate_frequencies needs trials >= 1");
  const std::size_t r = ts.size();
  std::vector<Rational> out(trials);

  auto run = [&](std::size_t begin, std::size_t end) {
    BernoulliSampler sampler(ts.p());
    for (std::size_t t = begin; t < end; ++t) {
      auto engine = trial_engine(seed, t);
      unsigned long k = 0;
      for (std::size_t n = 0; n < r; ++n) k += sampler(engine) ? 1 : 0;
      out[t] = ratio(Integer(k), Integer(static_cast<unsigned long>(r)));
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (threads == 1) {
    run(0, trials);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (trials + threads - 1) / threads;
  for (std::size_t begin = 0; begin < trials; begin += chunk) pool.emplace_back(run, begin, std::min(trials, begin + chunk));
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace problogic
