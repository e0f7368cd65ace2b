#include <gtest/gtest.h>

#include "generators.hpp"
#include "problogic/deduction.hpp"
#include "problogic/logic.hpp"
#include "problogic/proof_text.hpp"
#include "problogic/syntax.hpp"

using namespace problogic;

namespace {

const AtomTable kAtoms({"A", "B", "C"});

Sentence f(std::string_view text) { return parse_formula(text, kAtoms).ast; }

DeductionLine ax(std::string_view text, AxiomSchema schema) { return {f(text), AxiomJustification{schema, {}}}; }
DeductionLine hyp(std::string_view text, std::size_t k) { return {f(text), HypothesisJustification{k}}; }
DeductionLine mp(std::string_view text, std::size_t i, std::size_t j) { return {f(text), ModusPonensJustification{i, j}}; }

}  // namespace

TEST(AxiomMatch, Examples) {
  auto m = is_axiom_instance(f("A -> (B -> A)"));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->schema, AxiomSchema::A1);
  EXPECT_EQ(m->bindings, (std::vector<Sentence>{f("A"), f("B")}));

  m = is_axiom_instance(f("(A & B) -> (C -> (A & B))"));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->schema, AxiomSchema::A1);
  EXPECT_EQ(m->bindings, (std::vector<Sentence>{f("A & B"), f("C")}));

  EXPECT_FALSE(is_axiom_instance(f("A -> A")));
}

TEST(AxiomMatch, A2AndA3) {
  auto m = is_axiom_instance(f("(A -> (B -> C)) -> ((A -> B) -> (A -> C))"));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->schema, AxiomSchema::A2);
  EXPECT_EQ(m->bindings.size(), 3u);

  m = is_axiom_instance(f("(!B -> !A) -> ((!B -> A) -> B)"));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->schema, AxiomSchema::A3);
  EXPECT_EQ(m->bindings, (std::vector<Sentence>{f("A"), f("B")}));

  EXPECT_FALSE(is_axiom_instance(f("(A -> (B -> C)) -> ((A -> B) -> (A -> B))")));
}

TEST(AxiomMatch, RepeatedMetavariable) {
  auto s = axiom_instance(AxiomSchema::A1, std::vector<Sentence>{f("A"), f("A")});
  EXPECT_EQ(is_axiom_instance(s)->schema, AxiomSchema::A1);
}

TEST(AxiomMatch, InstancesAreTautologies) {
  gen::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    auto schema = static_cast<AxiomSchema>(gen::pick(rng, 3));
    std::vector<Sentence> bindings;
    for (std::size_t k = 0; k < arity(schema); ++k) bindings.push_back(gen::random_sentence(rng, 3, 4));
    auto s = axiom_instance(schema, bindings);
    auto m = is_axiom_instance(s);
    ASSERT_TRUE(m);
    EXPECT_TRUE(is_tautology(s));
    EXPECT_EQ(axiom_instance(m->schema, m->bindings), s);
  }
  // random sentences: a match implies a tautology
  for (int i = 0; i < 2000; ++i) {
    auto s = gen::random_sentence(rng, 3, 7);
    if (is_axiom_instance(s)) EXPECT_TRUE(is_tautology(s));
  }
}

TEST(AxiomInstance, WrongBindingCount) {
  EXPECT_THROW(axiom_instance(AxiomSchema::A2, std::vector<Sentence>{f("A")}), std::invalid_argument);
}

TEST(CheckDeduction, AcceptsSmallDeduction) {
  Deduction d{{f("A")}, {hyp("A", 0), ax("A -> (B -> A)", AxiomSchema::A1), mp("B -> A", 2, 1)}, f("B -> A")};
  auto report = check_deduction(d);
  EXPECT_TRUE(report.accepted) << report.message;
}

TEST(CheckDeduction, ClassicalIdentityProof) {
  Deduction d{{},
              {ax("(A -> ((A -> A) -> A)) -> ((A -> (A -> A)) -> (A -> A))", AxiomSchema::A2),
               ax("A -> ((A -> A) -> A)", AxiomSchema::A1), mp("(A -> (A -> A)) -> (A -> A)", 1, 2),
               ax("A -> (A -> A)", AxiomSchema::A1), mp("A -> A", 3, 4)},
              f("A -> A")};
  EXPECT_TRUE(check_deduction(d).accepted);
}

TEST(CheckDeduction, ForwardReference) {
  Deduction d{{f("A")}, {mp("B -> A", 2, 3), ax("A -> (B -> A)", AxiomSchema::A1), hyp("A", 0)}, f("A")};
  auto report = check_deduction(d);
  EXPECT_FALSE(report.accepted);
  EXPECT_EQ(report.error, DeductionError::ForwardReference);
  EXPECT_EQ(report.line, 1u);
}

TEST(CheckDeduction, MpMismatch) {
  Deduction d{{f("A"), f("C")}, {hyp("C", 1), ax("A -> (B -> A)", AxiomSchema::A1), mp("B -> A", 2, 1)}, f("B -> A")};
  auto report = check_deduction(d);
  EXPECT_FALSE(report.accepted);
  EXPECT_EQ(report.error, DeductionError::MpMismatch);
  EXPECT_EQ(report.line, 3u);
}

TEST(CheckDeduction, OtherErrors) {
  Deduction empty{{}, {}, f("A")};
  EXPECT_EQ(check_deduction(empty).error, DeductionError::EmptyDeduction);

  Deduction bad_hyp{{}, {hyp("A", 0)}, f("A")};
  EXPECT_EQ(check_deduction(bad_hyp).error, DeductionError::BadHypothesis);

  Deduction wrong_hyp{{f("B")}, {hyp("A", 0)}, f("A")};
  EXPECT_EQ(check_deduction(wrong_hyp).error, DeductionError::BadHypothesis);

  Deduction not_axiom{{}, {ax("A -> A", AxiomSchema::A1)}, f("A -> A")};
  EXPECT_EQ(check_deduction(not_axiom).error, DeductionError::NotAnAxiom);

  Deduction wrong_schema{{}, {ax("A -> (B -> A)", AxiomSchema::A3)}, f("A -> (B -> A)")};
  EXPECT_EQ(check_deduction(wrong_schema).error, DeductionError::NotAnAxiom);

  Deduction not_imp{{f("A"), f("B")}, {hyp("A", 0), hyp("B", 1), mp("B", 1, 2)}, f("B")};
  EXPECT_EQ(check_deduction(not_imp).error, DeductionError::MpNotImplication);

  Deduction goal{{f("A")}, {hyp("A", 0)}, f("B")};
  EXPECT_EQ(check_deduction(goal).error, DeductionError::GoalMismatch);

  Deduction zero_ref{{f("A")}, {hyp("A", 0), mp("A", 0, 1)}, f("A")};
  EXPECT_EQ(check_deduction(zero_ref).error, DeductionError::MalformedJustification);
}

TEST(CheckDeduction, ExplicitBindingsMustMatch) {
  Deduction d{{}, {{f("A -> (B -> A)"), AxiomJustification{AxiomSchema::A1, {f("A"), f("B")}}}}, f("A -> (B -> A)")};
  EXPECT_TRUE(check_deduction(d).accepted);
  d.lines[0].justification = AxiomJustification{AxiomSchema::A1, {f("B"), f("A")}};
  EXPECT_FALSE(check_deduction(d).accepted);
}

TEST(ProofText, ReadWriteRoundTrip) {
  const char* text =
      "# identity\n"
      "1. (A -> ((A -> A) -> A)) -> ((A -> (A -> A)) -> (A -> A)) ; axiom A2\n"
      "2. A -> ((A -> A) -> A) ; axiom A1\n"
      "3. (A -> (A -> A)) -> (A -> A) ; mp 1 2   \n"
      "\n"
      "4. A -> (A -> A) ; axiom A1\n"
      "5. A -> A ; mp 3 4\n";
  AtomTable atoms;
  auto d = read_proof_text(text, atoms);
  EXPECT_EQ(d.lines.size(), 5u);
  EXPECT_TRUE(check_deduction(d).accepted);
  auto written = write_proof_text(d, atoms);
  AtomTable again;
  auto d2 = read_proof_text(written, again);
  ASSERT_EQ(d2.lines.size(), d.lines.size());
  for (std::size_t i = 0; i < d.lines.size(); ++i) EXPECT_EQ(d2.lines[i].sentence, d.lines[i].sentence);
  EXPECT_EQ(write_proof_text(d2, again), written);
}

TEST(ProofText, Hypotheses) {
  const char* text =
      "assume A\n"
      "1. A ; hyp 0\n"
      "2. A -> (B -> A) ; axiom A1\n"
      "3. B -> A ; mp 2 1\n";
  AtomTable atoms;
  auto d = read_proof_text(text, atoms);
  ASSERT_EQ(d.hypotheses.size(), 1u);
  EXPECT_TRUE(check_deduction(d).accepted);
}

TEST(ProofText, Errors) {
  AtomTable atoms;
  try {
    read_proof_text("1. A ; hyp 0\n3. A ; hyp 0\n", atoms);
    FAIL();
  } catch (const ProofTextError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_proof_text("1. A -> ; axiom A1\n", atoms), ProofTextError);
  EXPECT_THROW(read_proof_text("1. A ; axiom A4\n", atoms), ProofTextError);
  EXPECT_THROW(read_proof_text("1. A ; frobnicate\n", atoms), ProofTextError);
  EXPECT_THROW(read_proof_text("1. A\n", atoms), ProofTextError);
  EXPECT_THROW(read_proof_text("# nothing\n", atoms), ProofTextError);
}
