#include <gtest/gtest.h>

#include "generators.hpp"
#include "problogic/logic.hpp"
#include "problogic/syntax.hpp"
#include "problogic/truth_table.hpp"

using namespace problogic;

namespace {

const AtomTable kAB({"A", "B"});
const AtomTable kABC({"A", "B", "C"});

Sentence f(std::string_view text, const AtomTable& atoms = kABC) { return parse_formula(text, atoms).ast; }

}  // namespace

TEST(Sentence, SugarExpandsToNotAnd) {
  auto a = Sentence::atom(0), b = Sentence::atom(1);
  EXPECT_EQ(disjoin(a, b), negate(conjoin(negate(a), negate(b))));
  EXPECT_EQ(implies(a, b), negate(conjoin(a, negate(b))));
  auto imp = implies(a, b).as_implication();
  ASSERT_TRUE(imp);
  EXPECT_EQ(imp->first, a);
  EXPECT_EQ(imp->second, b);
  EXPECT_FALSE(conjoin(a, b).as_implication());
}

TEST(Sentence, SizeDepthAtoms) {
  auto s = f("A & !B");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.depth(), 3u);
  EXPECT_EQ(s.atoms(), (std::vector<AtomId>{0, 1}));
  EXPECT_EQ(Sentence::atom(3).depth(), 1u);
}

TEST(Sentence, Substitute) {
  auto s = f("A -> B");
  auto out = substitute(s, {{0, f("C & A")}});
  EXPECT_EQ(out, f("C & A -> B"));
}

TEST(Eval, Examples) {
  for (std::uint64_t m = 0; m < 4; ++m) {
    EXPECT_FALSE(eval(f("A & !A", kAB), Valuation::from_minterm(m, 2)));
  }
  EXPECT_TRUE(eval(f("A -> (B -> A)", kAB), Valuation::parse("10")));
  EXPECT_FALSE(eval(f("A & B", kAB), Valuation::parse("10")));
}

TEST(Eval, OutOfRangeAtom) {
  EXPECT_THROW(eval(Sentence::atom(2), Valuation::parse("10")), std::domain_error);
}

TEST(Eval, SugarSemanticsExhaustive) {
  auto a = Sentence::atom(0), b = Sentence::atom(1);
  for (std::uint64_t m = 0; m < 4; ++m) {
    auto v = Valuation::from_minterm(m, 2);
    bool va = v.bits[0], vb = v.bits[1];
    EXPECT_EQ(eval(disjoin(a, b), v), va || vb);
    EXPECT_EQ(eval(implies(a, b), v), !va || vb);
  }
}

TEST(Valuation, MintermOrderIsAtomZeroFirst) {
  auto v = Valuation::from_minterm(0b100, 3);
  EXPECT_EQ(v.to_string(), "100");
  EXPECT_EQ(v.minterm(), 4u);
  EXPECT_EQ(Valuation::parse("011").minterm(), 3u);
  EXPECT_THROW(Valuation::parse("01x"), std::invalid_argument);
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(is_tautology(f("A -> (B -> A)")));
  EXPECT_TRUE(is_tautology(f("A | !A")));
  EXPECT_FALSE(is_tautology(f("A & !A")));
  EXPECT_FALSE(is_satisfiable(f("A & !A")));
  EXPECT_TRUE(is_satisfiable(f("A & B")));
}

TEST(SemanticEqual, Examples) {
  EXPECT_TRUE(semantic_equal(f("A & B"), f("B & A")));
  EXPECT_TRUE(semantic_equal(f("A & (B | !B)"), f("A")));
  EXPECT_FALSE(semantic_equal(f("A"), f("B")));
}

TEST(SemanticEqual, ConjunctionLawsExhaustiveDepth3) {
  auto corpus = gen::all_sentences(3, 2);
  for (const auto& a : corpus) {
    EXPECT_TRUE(semantic_equal(conjoin(a, a), a));
    for (const auto& b : corpus) {
      EXPECT_TRUE(semantic_equal(conjoin(a, b), conjoin(b, a)));
    }
  }
  // associativity over a thinned triple product
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    for (std::size_t j = 1; j < corpus.size(); j += 4) {
      for (std::size_t k = 2; k < corpus.size(); k += 5) {
        const auto &a = corpus[i], &b = corpus[j], &c = corpus[k];
        EXPECT_TRUE(semantic_equal(conjoin(a, conjoin(b, c)), conjoin(conjoin(a, b), c)));
      }
    }
  }
}

TEST(TruthTable, MatchesEval) {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto s = gen::random_sentence(rng, 4, 6);
    auto t = TruthTable::of(s, 4);
    for (std::uint64_t m = 0; m < 16; ++m) EXPECT_EQ(t.test(m), eval(s, Valuation::from_minterm(m, 4)));
  }
}

TEST(TruthTable, WideTablesUseSeveralWords) {
  auto x = TruthTable::variable(8, 0);
  EXPECT_EQ(x.count(), 128u);
  EXPECT_TRUE((x | ~x).all());
  EXPECT_TRUE((x & ~x).none());
  EXPECT_TRUE(x.test(255));
  EXPECT_FALSE(x.test(127));
  EXPECT_THROW(TruthTable::of(Sentence::atom(0), 21), std::domain_error);
}

TEST(TruthTable, JointTablesRenumberDensely) {
  std::vector<Sentence> ss{Sentence::atom(5), implies(Sentence::atom(9), Sentence::atom(5))};
  auto tables = joint_truth_tables(ss);
  ASSERT_EQ(tables.size(), 2u);
  EXPECT_EQ(tables[0].vars(), 2u);
  EXPECT_EQ(tables[0], TruthTable::variable(2, 0));
  EXPECT_EQ(tables[1], ~TruthTable::variable(2, 1) | TruthTable::variable(2, 0));
}
