#include <gtest/gtest.h>

#include <cmath>

#include "qnum_generators.hpp"

using namespace problogic;
using namespace problogic::qnum;

namespace {

Rational q(const char* text) { return parse_rational(text); }

QNumber S(const char* text) { return QNumber::standard(q(text)); }

const IndexSet kEvens = IndexSet::multiples(2);

std::uint64_t count_upto(const IndexSet& a, std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += a.contains(i) ? 1 : 0;
  return c;
}

void expect_pointwise_equal(const QNumber& x, const QNumber& y, std::uint64_t upto = 200) {
  for (std::uint64_t n = 1; n <= upto; ++n) ASSERT_EQ(x.at(n), y.at(n)) << "n = " << n;
}

}  // namespace

TEST(IndexSet, Invariants) {
  auto a = IndexSet::finite({5, 1, 3, 3});
  EXPECT_EQ(a.listed(), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_THROW(IndexSet::finite({0}), std::invalid_argument);
  EXPECT_THROW(IndexSet::periodic({true}, {}), std::invalid_argument);
  EXPECT_TRUE(kEvens.contains(4));
  EXPECT_FALSE(kEvens.contains(3));
  auto p = IndexSet::periodic({true, false}, {false, true, true});
  std::vector<bool> expected{true, false, false, true, true, false, true, true};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(p.contains(n), expected[n - 1]) << n;
}

TEST(PartFrequency, Examples) {
  for (std::uint64_t n : {1, 7, 1000}) {
    EXPECT_EQ(part_frequency(IndexSet::all(), n), 1);
    EXPECT_EQ(part_frequency(IndexSet::none(), n), 0);
  }
  EXPECT_EQ(part_frequency(kEvens, 4), q("1/2"));
  EXPECT_EQ(part_frequency(kEvens, 5), q("2/5"));
  EXPECT_THROW(part_frequency(kEvens, 0), std::invalid_argument);
}

TEST(PartFrequency, MatchesCountingAndIdentities) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = gen::random_index_set(rng);
    auto b = gen::random_index_set(rng);
    for (std::uint64_t n = 1; n <= 120; n += 1 + gen::pick(rng, 9)) {
      Rational nq{Integer(static_cast<unsigned long>(n))};
      EXPECT_EQ(part_frequency(a, n), Rational(Integer(static_cast<unsigned long>(count_upto(a, n))) / nq));
      EXPECT_EQ(part_frequency(a, n) + part_frequency(a.complement(), n), 1);
      EXPECT_EQ(part_frequency(a.intersect(b), n) + part_frequency(a.intersect(b.complement()), n),
                part_frequency(a, n));
    }
  }
}

TEST(IndexSet, SetAlgebraKeepsDecidableKinds) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = gen::random_index_set(rng, false);
    auto b = gen::random_index_set(rng, false);
    for (const auto& c : {a.complement(), a.intersect(b), a.unite(b)}) EXPECT_TRUE(c.decidable());
    for (std::uint64_t n = 1; n <= 100; ++n) {
      EXPECT_EQ(a.intersect(b).contains(n), a.contains(n) && b.contains(n));
      EXPECT_EQ(a.unite(b).contains(n), a.contains(n) || b.contains(n));
      EXPECT_EQ(a.complement().contains(n), !a.contains(n));
    }
  }
  EXPECT_EQ(IndexSet::finite({1, 2}).complement().kind(), IndexSet::Kind::Cofinite);
  EXPECT_EQ(IndexSet::cofinite({1}).intersect(IndexSet::cofinite({2})).kind(), IndexSet::Kind::Cofinite);
  EXPECT_EQ(kEvens.unite(kEvens.complement()).kind(), IndexSet::Kind::Cofinite);
}

TEST(Filter, Examples) {
  std::vector<std::uint64_t> below7{1, 2, 3, 4, 5, 6};
  EXPECT_TRUE(filter_membership(IndexSet::cofinite(below7)).is_yes());
  EXPECT_TRUE(filter_membership(IndexSet::finite({1, 2, 3})).is_no());
  EXPECT_TRUE(filter_membership(kEvens).is_no());
  EXPECT_TRUE(filter_membership(IndexSet::periodic({false, false}, {true})).is_yes());
  auto squares = IndexSet::opaque([](std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    return r * r == n;
  });
  auto v = filter_membership(squares, 100);
  EXPECT_TRUE(v.is_unknown());
  EXPECT_EQ(v.frequency, q("1/10"));
  EXPECT_EQ(to_string(v), "unknown(1/10@horizon=100)");
  EXPECT_EQ(to_string(Verdict::yes()), "yes");
}

TEST(Filter, LawsOnDecidableClasses) {
  EXPECT_TRUE(filter_membership(IndexSet::all()).is_yes());
  EXPECT_TRUE(filter_membership(IndexSet::none()).is_no());
  gen::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gen::random_index_set(rng, false);
    auto b = gen::random_index_set(rng, false);
    auto in = [](const IndexSet& s) { return filter_membership(s).is_yes(); };
    EXPECT_EQ(in(a), *a.density() == 1);
    if (in(a) && in(b)) EXPECT_TRUE(in(a.intersect(b)));
    if (in(a)) EXPECT_TRUE(in(a.unite(b)));
    EXPECT_FALSE(filter_membership(a).is_unknown());
  }
}

TEST(QNumber, Construction) {
  EXPECT_EQ(QNumber::reciprocal_index().at(4), q("1/4"));
  EXPECT_EQ(QNumber::index().at(9), 9);
  auto p = QNumber::periodic({q("7")}, {q("1"), q("2")});
  EXPECT_EQ(p.at(1), 7);
  EXPECT_EQ(p.at(2), 1);
  EXPECT_EQ(p.at(3), 2);
  EXPECT_EQ(p.at(4), 1);
  EXPECT_THROW(p.at(0), QNumberError);
  auto rf = QNumber::rational_function(Polynomial({q("1")}), Polynomial({q("-3"), q("1")}));
  EXPECT_EQ(rf.at(3), 0);
  EXPECT_EQ(rf.at(5), q("1/2"));
  EXPECT_EQ(S("5").standard_value(), q("5"));
  EXPECT_FALSE(QNumber::index().standard_value());
}

TEST(QEqual, Examples) {
  auto x = QNumber::reciprocal_index();
  auto y = x.with_overrides({{3, q("9")}, {10, q("0")}});
  EXPECT_NE(x.at(3), y.at(3));
  EXPECT_TRUE(q_equal(x, y).is_yes());
  EXPECT_TRUE(q_equal(S("0"), S("1")).is_no());
  auto ones = QNumber::periodic({}, {q("1"), q("1")});
  auto alternating = QNumber::periodic({}, {q("0"), q("1")});
  EXPECT_TRUE(q_equal(ones, alternating).is_no());
  EXPECT_TRUE(q_equal(ones, S("1")).is_yes());
}

TEST(QEqual, OpaqueIsUnknownUnlessItCancels) {
  gen::Rng rng(44);
  auto a = gen::random_opaque(rng);
  auto b = gen::random_opaque(rng);
  auto v = q_equal(a, b, 500);
  EXPECT_TRUE(v.is_unknown());
  EXPECT_EQ(v.horizon, 500u);
  EXPECT_TRUE(q_equal(a, a).is_yes());
  EXPECT_TRUE(q_equal(a - a, S("0")).is_yes());
  EXPECT_TRUE(q_less(a, a).is_no());
  auto copy = QNumber::opaque([a](std::uint64_t n) { return a.at(n); });
  auto same = q_equal(a, copy, 300);
  EXPECT_TRUE(same.is_unknown());
  EXPECT_EQ(same.frequency, 1);
}

TEST(QEqual, EquivalenceOnDecidableClass) {
  gen::Rng rng(45);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = gen::random_structured(rng);
    auto y = gen::random_structured(rng);
    auto z = gen::coin(rng) ? x.with_overrides({{1, q("4")}}) : gen::random_structured(rng);
    EXPECT_TRUE(q_equal(x, x).is_yes());
    EXPECT_EQ(q_equal(x, y).kind, q_equal(y, x).kind);
    if (q_equal(x, y).is_yes() && q_equal(y, z).is_yes()) EXPECT_TRUE(q_equal(x, z).is_yes());
    EXPECT_FALSE(q_equal(x, y).is_unknown());
  }
}

TEST(QLift, Examples) {
  auto sum = S("2") + S("3");
  EXPECT_EQ(sum.standard_value(), q("5"));
  EXPECT_TRUE(q_equal(sum, S("5")).is_yes());
  gen::Rng rng(46);
  auto x = gen::random_qnumber(rng);
  EXPECT_TRUE(q_equal(x + -x, S("0")).is_yes());
  auto two = S("2");
  auto prod = two * reciprocal(two);
  EXPECT_EQ(prod.standard_value(), q("1"));

  std::vector<QNumber> args{S("2"), S("5")};
  EXPECT_EQ(q_lift(QOp::Add, args).standard_value(), q("7"));
  EXPECT_EQ(q_lift(QOp::Multiply, args).standard_value(), q("10"));
  EXPECT_EQ(q_lift(QOp::Negate, std::span(args).first(1)).standard_value(), q("-2"));
  EXPECT_EQ(q_lift(QOp::Reciprocal, std::span(args).first(1)).standard_value(), q("1/2"));
  EXPECT_THROW(q_lift(QOp::Negate, args), QNumberError);
}

TEST(QLift, ReciprocalPrecondition) {
  auto kind_of = [](const QNumber& x) {
    try {
      reciprocal(x);
    } catch (const QNumberError& e) {
      return e.kind() == QNumberError::Kind::ReciprocalOfInfinitesimalOrZero;
    }
    return false;
  };
  EXPECT_TRUE(kind_of(S("0")));
  EXPECT_TRUE(kind_of(QNumber::periodic({}, {q("0"), q("1")})));
  gen::Rng rng(47);
  EXPECT_TRUE(kind_of(gen::random_opaque(rng)));
  auto inv = reciprocal(QNumber::reciprocal_index());
  EXPECT_TRUE(q_equal(inv, QNumber::index()).is_yes());
  // zero values map to zero
  auto x = QNumber::periodic({q("0")}, {q("2")});
  auto rx = reciprocal(x);
  EXPECT_EQ(rx.at(1), 0);
  EXPECT_EQ(rx.at(2), q("1/2"));
}

TEST(FieldLaws, RandomSequences) {
  gen::Rng rng(48);
  auto zero = S("0"), one = S("1");
  for (int trial = 0; trial < 60; ++trial) {
    auto x = gen::random_qnumber(rng), y = gen::random_qnumber(rng), z = gen::random_qnumber(rng);
    std::vector<std::pair<QNumber, QNumber>> laws{
        {x + y, y + x},         {(x + y) + z, x + (y + z)}, {x + zero, x},
        {x * y, y * x},         {(x * y) * z, x * (y * z)}, {x * one, x},
        {x * (y + z), x * y + x * z},
    };
    for (const auto& [lhs, rhs] : laws) {
      expect_pointwise_equal(lhs, rhs);
      EXPECT_TRUE(q_equal(lhs, rhs).is_yes());
    }
    EXPECT_TRUE(q_equal(x + -x, zero).is_yes());
    auto s = gen::random_structured(rng);
    if (q_less(zero, abs(s)).is_yes()) EXPECT_TRUE(q_equal(s * reciprocal(s), one).is_yes());
  }
  EXPECT_TRUE(q_equal(zero, one).is_no());
}

TEST(OrderLaws, Standards) {
  gen::Rng rng(49);
  auto zero = S("0");
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gen::random_rational(rng), b = gen::random_rational(rng), c = gen::random_rational(rng);
    auto x = QNumber::standard(a), y = QNumber::standard(b), z = QNumber::standard(c);
    EXPECT_EQ(q_less(x, y).is_yes(), a < b);
    EXPECT_TRUE(q_less(x, x).is_no());
    if (q_less(x, y).is_yes() && q_less(y, z).is_yes()) EXPECT_TRUE(q_less(x, z).is_yes());
    if (q_less(x, y).is_yes()) EXPECT_TRUE(q_less(x + z, y + z).is_yes());
    if (q_less(zero, z).is_yes() && q_less(x, y).is_yes()) EXPECT_TRUE(q_less(x * z, y * z).is_yes());
    int holds = q_less(x, y).is_yes() + q_less(y, x).is_yes() + q_equal(x, y).is_yes();
    EXPECT_EQ(holds, 1);
  }
}

TEST(OrderLaws, StructuredSequences) {
  gen::Rng rng(50);
  auto zero = S("0");
  for (int trial = 0; trial < 300; ++trial) {
    auto x = gen::random_structured(rng), y = gen::random_structured(rng), z = gen::random_structured(rng);
    EXPECT_TRUE(q_less(x, x).is_no());
    EXPECT_FALSE(q_less(x, y).is_unknown());
    if (q_less(x, y).is_yes() && q_less(y, z).is_yes()) EXPECT_TRUE(q_less(x, z).is_yes());
    if (q_less(x, y).is_yes()) {
      EXPECT_TRUE(q_less(x + z, y + z).is_yes());
      EXPECT_TRUE(q_less(y, x).is_no());
      EXPECT_TRUE(q_equal(x, y).is_no());
    }
    if (q_less(zero, z).is_yes() && q_less(x, y).is_yes()) EXPECT_TRUE(q_less(x * z, y * z).is_yes());
  }
}

TEST(QLess, Examples) {
  EXPECT_TRUE(q_less(S("1"), S("2")).is_yes());
  gen::Rng rng(51);
  auto x = gen::random_qnumber(rng);
  EXPECT_TRUE(q_less(x, x).is_no());
  EXPECT_TRUE(q_less(S("0"), QNumber::reciprocal_index()).is_yes());
  // ⟨1/n⟩ is below every positive standard, and its negation above every negative one
  EXPECT_TRUE(q_less(QNumber::reciprocal_index(), S("1/1000")).is_yes());
  // only half the indices dominate
  EXPECT_TRUE(q_less(S("0"), QNumber::periodic({}, {q("1"), q("-1")})).is_no());
}

TEST(Classify, Examples) {
  EXPECT_EQ(q_classify(QNumber::reciprocal_index(), 10000).kind, Magnitude::Kind::Infinitesimal);
  EXPECT_EQ(q_classify(QNumber::index(), 10000).kind, Magnitude::Kind::Infinite);
  EXPECT_EQ(q_classify(-QNumber::index()).kind, Magnitude::Kind::Infinite);
  EXPECT_EQ(q_classify(S("3")).kind, Magnitude::Kind::Appreciable);
  EXPECT_EQ(q_classify(S("0")).kind, Magnitude::Kind::Infinitesimal);
  auto mixed = QNumber::periodic({}, {q("1"), q("0")}) * QNumber::index();
  EXPECT_EQ(q_classify(mixed).kind, Magnitude::Kind::Mixed);
  gen::Rng rng(52);
  auto m = q_classify(gen::random_opaque(rng), 50);
  EXPECT_EQ(m.kind, Magnitude::Kind::Unknown);
  EXPECT_EQ(m.horizon, 50u);
}

TEST(Classify, InfinitelyClose) {
  EXPECT_TRUE(infinitely_close(S("5"), S("5") + QNumber::reciprocal_index()).is_yes());
  EXPECT_TRUE(infinitely_close(S("5"), S("6")).is_no());
  gen::Rng rng(53);
  auto a = gen::random_opaque(rng);
  EXPECT_TRUE(infinitely_close(a, a + S("0")).is_yes());
  EXPECT_TRUE(infinitely_close(a, gen::random_opaque(rng)).is_unknown());
}
