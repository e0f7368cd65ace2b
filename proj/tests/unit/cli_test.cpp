#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "problogic/bernoulli.hpp"
#include "problogic/bfunc.hpp"
#include "problogic/distribution_io.hpp"
#include "problogic/logic.hpp"
#include "problogic/syntax.hpp"

using namespace problogic;
using cli::run;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Rational binomial_oracle(unsigned r, unsigned k, const Rational& p) {
  Integer c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * (r - i) / (i + 1);
  Rational out = c;
  for (unsigned i = 0; i < k; ++i) out *= p;
  for (unsigned i = k; i < r; ++i) out *= 1 - p;
  return out;
}

}  // namespace

TEST(Cli, Tautology) {
  auto r = run({"taut", "A | !A"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload, "tautology: yes\n");

  r = run({"taut", "B -> A"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.payload, "tautology: no\natoms: A B\ncounterexample: 01\n");

  r = run({"taut", "B -> A", "--atoms", "B,A"});
  EXPECT_EQ(r.payload, "tautology: no\natoms: B A\ncounterexample: 10\n");
}

TEST(Cli, EvalAtomOrder) {
  EXPECT_EQ(run({"eval", "X10 & !X2", "--world", "10"}).payload, "value: 0\n");
  EXPECT_EQ(run({"eval", "X10 & !X2", "--world", "01"}).payload, "value: 1\n");
  EXPECT_EQ(run({"eval", "A", "--world", "1", "--atoms", "A,B"}).exit_code, 1);
  EXPECT_EQ(run({"eval", "A & C", "--world", "11", "--atoms", "A,B"}).exit_code, 1);
  auto bad = run({"eval", "A & & B", "--world", "11"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.message.find("column 5"), std::string::npos);
}

TEST(Cli, BernoulliMatchesOracle) {
  auto r = run({"bernoulli", "--r", "3", "--k", "2", "--p", "1/2"});
  ASSERT_TRUE(r.ok());
  auto ls = lines(r.payload);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(fields(ls[1]), (std::vector<std::string>{"2", "3/8", "0.375000000000"}));

  gen::Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    unsigned n = 1 + rng() % 12;
    Rational p = ratio(rng() % 8, 7);
    auto t = run({"bernoulli", "--r", std::to_string(n), "--p", to_string(p)});
    ASSERT_TRUE(t.ok()) << t.message;
    auto rows = lines(t.payload);
    ASSERT_EQ(rows.size(), n + 2);
    for (unsigned k = 0; k <= n; ++k) {
      auto f = fields(rows[k + 1]);
      EXPECT_EQ(f[0], std::to_string(k));
      EXPECT_EQ(q(f[1].c_str()), binomial_oracle(n, k, p));
      EXPECT_EQ(f[2], to_decimal(binomial_oracle(n, k, p)));
    }
  }
}

TEST(Cli, BernoulliRange) {
  auto r = run({"bernoulli", "--r", "10", "--p", "1/2", "--a", "5/2", "--b", "6"});
  ASSERT_TRUE(r.ok());
  auto ls = lines(r.payload);
  EXPECT_EQ(ls[0], "range: 3..6");
  Rational sum = 0;
  for (unsigned k = 3; k <= 6; ++k) sum += binomial_oracle(10, k, q("1/2"));
  EXPECT_EQ(ls[1], "probability: " + to_string(sum) + " " + to_decimal(sum));
  EXPECT_EQ(run({"bernoulli", "--r", "10", "--p", "1/2", "--a", "7"}).exit_code, 2);
  EXPECT_EQ(run({"bernoulli", "--r", "10", "--p", "3/2"}).exit_code, 2);
  EXPECT_EQ(run({"bernoulli", "--r", "x", "--p", "1/2"}).exit_code, 2);
}

TEST(Cli, Lln) {
  auto r = run({"lln", "--r", "100", "--p", "1/2", "--eps", "1/10"});
  ASSERT_TRUE(r.ok());
  auto ls = lines(r.payload);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(fields(ls[0]),
            (std::vector<std::string>{"r", "bound", "exact_prob", "empirical_coverage", "trials", "seed"}));
  auto row = fields(ls[1]);
  EXPECT_EQ(row[0], "100");
  EXPECT_EQ(row[1], "3/4");
  Rational exact = 0;
  for (unsigned k = 40; k <= 60; ++k) exact += binomial_oracle(100, k, q("1/2"));
  EXPECT_EQ(q(row[2].c_str()), exact);
  EXPECT_EQ(q(row[2].c_str()), range_prob(100, 40, 60, q("1/2")));

  auto a = run({"lln", "--r", "200", "--p", "1/2", "--eps", "1/10", "--trials", "300", "--seed", "7"});
  auto b = run({"lln", "--r", "200", "--p", "1/2", "--eps", "1/10", "--trials", "300", "--seed", "7", "--threads", "4"});
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a.payload, b.payload);
  EXPECT_EQ(fields(lines(a.payload)[1])[4], "300");
}

TEST(Cli, DistributionCommands) {
  std::string dist = "11 1/2\n10 1/4\n00 1/4\n";
  auto bf = parse_distribution(dist);
  gen::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    AtomTable atoms({"A", "B"});
    auto s = gen::random_sentence(rng, 2, 4);
    auto text = format_formula(s, atoms);
    auto r = run({"prob", text, "--dist", "-", "--atoms", "A,B"}, dist);
    ASSERT_TRUE(r.ok()) << text << ": " << r.message;
    Rational oracle = 0;
    for (std::size_t w = 0; w < 4; ++w) {
      if (eval(s, Valuation::from_minterm(w, 2))) oracle += bf.mass(w);
    }
    EXPECT_EQ(r.payload, "b: " + to_string(oracle) + " " + to_decimal(oracle) + "\n") << text;
  }
  EXPECT_EQ(run({"cond", "B", "A", "--dist", "-"}, dist).payload, "b(B/C): 2/3 0.666666666667\n");
  EXPECT_EQ(run({"cond", "B", "!A & B", "--dist", "-"}, dist).exit_code, 1);
}

TEST(Cli, DistributionErrors) {
  auto err = [](const std::string& text) { return run({"prob", "A", "--dist", "-"}, text); };
  EXPECT_TRUE(err("11 1/2\n00 1/2").ok());
  auto e = err("1 1/2\n0 1/4");
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_NE(e.message.find("SumNotOne"), std::string::npos);
  EXPECT_NE(err("11 1/2\n11 1/2").message.find("DuplicateMinterm"), std::string::npos);
  EXPECT_NE(err("11 1/2\n1 1/2").message.find("BadBitstring"), std::string::npos);
  EXPECT_NE(err("1 3/2\n0 -1/2").message.find("NegativeMass"), std::string::npos);
  EXPECT_EQ(run({"prob", "A & B", "--dist", "-"}, "1 1\n").exit_code, 1);
  EXPECT_EQ(run({"prob", "A", "--dist", "/nonexistent/dist.txt"}).exit_code, 1);
}

TEST(Cli, ProveAndCheck) {
  auto p = run({"prove", "!!A -> A"});
  ASSERT_TRUE(p.ok()) << p.message;
  auto c = run({"check", "-"}, p.payload);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(lines(c.payload)[0], "accepted: yes");

  auto broken = p.payload;
  broken.replace(broken.find("axiom A"), 8, "axiom A3");
  auto b = run({"check", "-"}, broken);
  EXPECT_EQ(b.exit_code, 1);
  EXPECT_EQ(lines(b.payload)[0], "accepted: no");

  auto n = run({"prove", "A & B -> A"});
  EXPECT_EQ(n.exit_code, 1);
  EXPECT_NE(n.message.find("NotDerivable"), std::string::npos);
  EXPECT_NE(run({"prove", "A -> B"}).message.find("NotTautology"), std::string::npos);
}

TEST(Cli, Classical) {
  std::string set = "# two coins\nA & B\nA & !B\n!A & B\n!A & !B\n";
  EXPECT_EQ(run({"classical", "--set", "-", "--event", "A | B"}, set).payload, "3 4 3/4 0.750000000000\n");
  auto mixed = run({"classical", "--set", "-", "--event", "A | B"}, "A & B\nA & !B\n!A\n");
  EXPECT_EQ(mixed.exit_code, 1);
  EXPECT_NE(mixed.message.find("MixedMember"), std::string::npos);
  EXPECT_NE(run({"classical", "--set", "-", "--event", "A"}, "A\nB\n").message.find("NotComplete"),
            std::string::npos);
}

TEST(Cli, Qnum) {
  EXPECT_EQ(run({"qnum", "freq", "multiples 3", "--n", "10"}).payload, "frequency: 3/10 0.300000000000\n");
  EXPECT_EQ(run({"qnum", "member", "cofinite 1,2"}).payload, "verdict: yes\n");
  EXPECT_EQ(run({"qnum", "member", "finite 1,2"}).payload, "verdict: no\n");
  EXPECT_EQ(run({"qnum", "member", "periodic 01"}).payload, "verdict: no\n");
  EXPECT_EQ(run({"qnum", "member", "squares", "--horizon", "100"}).payload,
            "verdict: unknown(1/10@horizon=100)\n");
  EXPECT_EQ(run({"qnum", "equal", "recip-n", "const 0"}).payload, "verdict: no\n");
  EXPECT_EQ(run({"qnum", "close", "recip-n", "const 0"}).payload, "verdict: yes\n");
  EXPECT_EQ(run({"qnum", "less", "const 0", "recip-n"}).payload, "verdict: yes\n");
  EXPECT_EQ(run({"qnum", "equal", "lin * recip-n", "const 1"}).payload, "verdict: yes\n");
  EXPECT_EQ(run({"qnum", "equal", "isqrt", "isqrt + 0"}).payload, "verdict: yes\n");
  EXPECT_EQ(run({"qnum", "classify", "lin"}).payload, "class: infinite\n");
  EXPECT_EQ(run({"qnum", "classify", "1/lin"}).payload, "class: infinitesimal\n");
  EXPECT_EQ(run({"qnum", "classify", "const 1/2 + recip-n"}).payload, "class: appreciable\n");
  EXPECT_EQ(run({"qnum", "classify", "periodic 1,0"}).payload, "class: mixed\n");
  EXPECT_EQ(run({"qnum", "classify", "1/(lin - lin)"}).exit_code, 1);
  EXPECT_EQ(run({"qnum", "equal", "lin +", "lin"}).exit_code, 1);
  EXPECT_EQ(run({"qnum", "member", "periodic 0x"}).exit_code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"bogus"}).exit_code, 2);
  EXPECT_EQ(run({"taut"}).exit_code, 2);
  EXPECT_EQ(run({"taut", "A", "--nope"}).exit_code, 2);
  auto h = run({"--help"});
  EXPECT_EQ(h.exit_code, 0);
  EXPECT_NE(h.payload.find("bernoulli"), std::string::npos);
}
