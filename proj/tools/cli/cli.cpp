#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "problogic/bernoulli.hpp"
#include "problogic/bfunc.hpp"
#include "problogic/classical.hpp"
#include "problogic/deduction.hpp"
#include "problogic/distribution_io.hpp"
#include "problogic/logic.hpp"
#include "problogic/proof_synthesis.hpp"
#include "problogic/proof_text.hpp"
#include "problogic/qnum/qnumber.hpp"
#include "problogic/syntax.hpp"
#include "qnum_syntax.hpp"

namespace problogic::cli {

namespace {

class Failure : public std::runtime_error {
 public:
  explicit Failure(const std::string& message, int code = 1) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string number(const Rational& x) { return to_string(x) + " " + to_decimal(x); }

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw Failure(flag + ": not a rational number: '" + text + "'", 2);
  }
}

std::string read_input(const std::string& path, std::string_view stdin_text) {
  if (path == "-") return std::string(stdin_text);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// X2 before X10
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      auto na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j || (a.size() - i == b.size() - j && a < b);
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

Sentence parse_arg(std::string_view text, AtomTable& atoms) {
  try {
    return parse_into(text, atoms);
  } catch (const SyntaxError& e) {
    throw Failure(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

// Atom order: --atoms when given, else names in natural order.
struct Formulas {
  AtomTable atoms;
  std::vector<Sentence> sentences;
};

Formulas parse_formulas(const std::vector<std::string>& texts, const std::string& atom_list) {
  Formulas out;
  if (!atom_list.empty()) {
    out.atoms = AtomTable(split_names(atom_list));
    std::size_t declared = out.atoms.size();
    for (const auto& t : texts) {
      out.sentences.push_back(parse_arg(t, out.atoms));
      if (out.atoms.size() != declared) {
        throw Failure("atom '" + out.atoms.name(static_cast<AtomId>(declared)) + "' is not listed in --atoms");
      }
    }
    return out;
  }
  AtomTable scratch;
  for (const auto& t : texts) parse_arg(t, scratch);
  auto names = scratch.names();
  std::sort(names.begin(), names.end(), natural_less);
  out.atoms = AtomTable(names);
  for (const auto& t : texts) out.sentences.push_back(parse_arg(t, out.atoms));
  return out;
}

std::string atoms_line(const AtomTable& atoms) {
  std::string out = "atoms:";
  for (const auto& n : atoms.names()) out += " " + n;
  return out + "\n";
}

BFunction load_for(const std::string& path, std::string_view stdin_text, const AtomTable& atoms) {
  auto bf = [&] {
    try {
      return parse_distribution(read_input(path, stdin_text));
    } catch (const DistributionError& e) {
      throw Failure(std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const BFunctionError& e) {
      throw Failure(e.what());
    }
  }();
  if (atoms.size() > bf.atoms()) {
    throw Failure("formula uses " + std::to_string(atoms.size()) + " atoms but the distribution has " +
                  std::to_string(bf.atoms()));
  }
  return bf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) line += i + 1 == row.size() ? row[i] : pad(row[i], width[i] + 2);
    out += line + "\n";
  }
  return out;
}

std::uint64_t positive(const std::string& flag, long long v) {
  if (v < 1) throw Failure(flag + " must be >= 1", 2);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

CommandReport run(const std::vector<std::string>& args, std::string_view stdin_text) {
  CLI::App app{"Exact propositional and probabilistic logic toolkit", "problogic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::vector<std::string> formulas;
  std::string formula, formula_b, formula_c, atom_list, world, dist, proof_file, set_file, event;
  std::string r_text, k_text, p_text, a_text, b_text, eps_text;
  long long trials = 0, threads = 1, horizon = static_cast<long long>(qnum::kDefaultHorizon), n_index = 0;
  std::uint64_t seed = 42;
  std::string set_text, seq_x, seq_y;

  auto* eval_cmd = app.add_subcommand("eval", "Truth value of a formula in one world");
  eval_cmd->add_option("formula", formula, "Formula")->required();
  eval_cmd->add_option("--world", world, "Bits, one per atom")->required();
  eval_cmd->add_option("--atoms", atom_list, "Atom order, comma separated");

  auto* taut_cmd = app.add_subcommand("taut", "Tautology check");
  taut_cmd->add_option("formula", formula, "Formula")->required();
  taut_cmd->add_option("--atoms", atom_list, "Atom order, comma separated");

  auto* prove_cmd = app.add_subcommand("prove", "Synthesize an A1-A3 proof");
  prove_cmd->add_option("formula", formula, "Formula")->required();

  auto* check_cmd = app.add_subcommand("check", "Check a proof file");
  check_cmd->add_option("proof", proof_file, "Proof text file, - for stdin")->required();

  auto* prob_cmd = app.add_subcommand("prob", "b(A) under a distribution");
  prob_cmd->add_option("formula", formula, "Formula")->required();
  prob_cmd->add_option("--dist", dist, "Distribution file, - for stdin")->required();
  prob_cmd->add_option("--atoms", atom_list, "Atom order, comma separated");

  auto* cond_cmd = app.add_subcommand("cond", "Conditional probability b(B/C)");
  cond_cmd->add_option("B", formula_b, "Formula B")->required();
  cond_cmd->add_option("C", formula_c, "Formula C")->required();
  cond_cmd->add_option("--dist", dist, "Distribution file, - for stdin")->required();
  cond_cmd->add_option("--atoms", atom_list, "Atom order, comma separated");

  auto* bern_cmd = app.add_subcommand("bernoulli", "Exact binomial probabilities");
  bern_cmd->add_option("--r", r_text, "Number of tests")->required();
  bern_cmd->add_option("--p", p_text, "Success probability")->required();
  bern_cmd->add_option("--k", k_text, "Number of successes (default: table of all k)");
  auto* a_opt = bern_cmd->add_option("--a", a_text, "Range lower bound");
  auto* b_opt = bern_cmd->add_option("--b", b_text, "Range upper bound");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);

  auto* lln_cmd = app.add_subcommand("lln", "Law of large numbers bound and simulation");
  lln_cmd->add_option("--r", r_text, "Number of tests")->required();
  lln_cmd->add_option("--p", p_text, "Success probability")->required();
  lln_cmd->add_option("--eps", eps_text, "Tolerance")->required();
  lln_cmd->add_option("--trials", trials, "Monte-Carlo trials (0: none)");
  lln_cmd->add_option("--seed", seed, "Seed");
  lln_cmd->add_option("--threads", threads, "Worker threads");

  auto* classical_cmd = app.add_subcommand("classical", "m/n over a complete set");
  classical_cmd->add_option("--set", set_file, "One formula per line, - for stdin")->required();
  classical_cmd->add_option("--event", event, "Event formula")->required();
  classical_cmd->add_option("--atoms", atom_list, "Atom order, comma separated");

  auto* qnum_cmd = app.add_subcommand("qnum", "Q-number and density-filter queries");
  qnum_cmd->require_subcommand(1);
  auto* q_freq = qnum_cmd->add_subcommand("freq", "Part-set frequency of an index set");
  q_freq->add_option("set", set_text, "Index set")->required();
  q_freq->add_option("--n", n_index, "Prefix length")->required();
  auto* q_member = qnum_cmd->add_subcommand("member", "Density-filter membership");
  q_member->add_option("set", set_text, "Index set")->required();
  auto* q_equal_cmd = qnum_cmd->add_subcommand("equal", "Q-equivalence of two sequences");
  auto* q_less_cmd = qnum_cmd->add_subcommand("less", "Q-less between two sequences");
  auto* q_close_cmd = qnum_cmd->add_subcommand("close", "Infinitely close sequences");
  for (auto* c : {q_equal_cmd, q_less_cmd, q_close_cmd}) {
    c->add_option("x", seq_x, "Sequence")->required();
    c->add_option("y", seq_y, "Sequence")->required();
  }
  auto* q_classify_cmd = qnum_cmd->add_subcommand("classify", "Infinitesimal / appreciable / infinite");
  q_classify_cmd->add_option("x", seq_x, "Sequence")->required();
  for (auto* c : {q_member, q_equal_cmd, q_less_cmd, q_close_cmd, q_classify_cmd}) {
    c->add_option("--horizon", horizon, "Prefix length for unknown-verdict evidence");
  }

  CommandReport report;
  std::ostringstream out;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      std::ostringstream err;
      int code = app.exit(e, out, err);
      report.payload = out.str();
      report.message = err.str();
      report.exit_code = code == 0 ? 0 : 2;
      report.status = code == 0 ? CommandReport::Status::Ok : CommandReport::Status::Error;
      return report;
    }

    if (eval_cmd->parsed()) {
      auto f = parse_formulas({formula}, atom_list);
      Valuation v;
      try {
        v = Valuation::parse(world);
      } catch (const std::invalid_argument& e) {
        throw Failure(std::string("--world: ") + e.what(), 2);
      }
      if (v.size() != f.atoms.size()) {
        throw Failure("--world has " + std::to_string(v.size()) + " bits for " + std::to_string(f.atoms.size()) +
                      " atoms (" + atoms_line(f.atoms).substr(7, std::string::npos) + ")");
      }
      out << "value: " << (eval(f.sentences[0], v) ? 1 : 0) << "\n";
    } else if (taut_cmd->parsed()) {
      auto f = parse_formulas({formula}, atom_list);
      const auto& s = f.sentences[0];
      if (f.atoms.size() > kMaxAtoms) throw Failure("too many atoms");
      auto t = TruthTable::of(s, f.atoms.size());
      if (t.all()) {
        out << "tautology: yes\n";
      } else {
        std::size_t w = 0;
        while (t.test(w)) ++w;
        out << "tautology: no\n" << atoms_line(f.atoms) << "counterexample: "
            << Valuation::from_minterm(w, f.atoms.size()).to_string() << "\n";
      }
    } else if (prove_cmd->parsed()) {
      AtomTable atoms;
      auto s = parse_arg(formula, atoms);
      try {
        out << write_proof_text(synthesize_proof(s), atoms);
      } catch (const SynthesisError& e) {
        throw Failure(std::string(to_string(e.kind())) + ": " + e.what());
      }
    } else if (check_cmd->parsed()) {
      AtomTable atoms;
      auto d = [&] {
        try {
          return read_proof_text(read_input(proof_file, stdin_text), atoms);
        } catch (const ProofTextError& e) {
          throw Failure(e.what());
        }
      }();
      auto r = check_deduction(d);
      if (r.accepted) {
        out << "accepted: yes\nlines: " << d.lines.size() << "\n";
      } else {
        out << "accepted: no\n";
        if (r.line) out << "line: " << *r.line << "\n";
        if (r.error) out << "error: " << to_string(*r.error) << "\n";
        out << "message: " << r.message << "\n";
        report.exit_code = 1;
        report.status = CommandReport::Status::Error;
      }
    } else if (prob_cmd->parsed()) {
      auto f = parse_formulas({formula}, atom_list);
      auto bf = load_for(dist, stdin_text, f.atoms);
      out << "b: " << number(b_eval(bf, f.sentences[0])) << "\n";
    } else if (cond_cmd->parsed()) {
      auto f = parse_formulas({formula_b, formula_c}, atom_list);
      auto bf = load_for(dist, stdin_text, f.atoms);
      try {
        out << "b(B/C): " << number(conditional_prob(bf, f.sentences[0], f.sentences[1])) << "\n";
      } catch (const BFunctionError& e) {
        throw Failure(e.what());
      }
    } else if (bern_cmd->parsed()) {
      auto r_q = rational_arg("--r", r_text);
      if (r_q < 1 || r_q.get_den() != 1 || r_q > 1'000'000) throw Failure("--r must be an integer in 1..1000000", 2);
      auto r = static_cast<std::size_t>(r_q.get_num().get_ui());
      auto p = rational_arg("--p", p_text);
      if (p < 0 || p > 1) throw Failure("--p must lie in [0, 1]", 2);
      std::vector<std::vector<std::string>> rows{{"k", "exact", "decimal"}};
      auto row = [&](std::size_t k) {
        Rational kq(static_cast<long>(k));
        auto v = range_prob(r, kq, kq, p);
        rows.push_back({std::to_string(k), to_string(v), to_decimal(v)});
      };
      if (!a_text.empty()) {
        auto a = rational_arg("--a", a_text), b = rational_arg("--b", b_text);
        auto range = RangeSpec::derive(r, a, b);
        if (range.empty()) throw Failure("empty range: k = " + std::to_string(range.k) + " > l = " + std::to_string(range.l));
        out << "range: " << range.k << ".." << range.l << "\nprobability: " << number(range_prob(r, a, b, p)) << "\n";
      } else if (!k_text.empty()) {
        auto k = rational_arg("--k", k_text);
        if (k < 0 || k > r_q || k.get_den() != 1) throw Failure("--k must be an integer in 0..r", 2);
        row(static_cast<std::size_t>(k.get_num().get_ui()));
        out << table(rows);
      } else {
        if (r > 10'000) throw Failure("table output is limited to r <= 10000", 2);
        for (std::size_t k = 0; k <= r; ++k) row(k);
        out << table(rows);
      }
    } else if (lln_cmd->parsed()) {
      auto r_q = rational_arg("--r", r_text);
      if (r_q < 1 || r_q.get_den() != 1 || r_q > 1'000'000) throw Failure("--r must be an integer in 1..1000000", 2);
      auto r = static_cast<std::size_t>(r_q.get_num().get_ui());
      auto p = rational_arg("--p", p_text);
      auto eps = rational_arg("--eps", eps_text);
      if (p < 0 || p > 1) throw Failure("--p must lie in [0, 1]", 2);
      if (eps <= 0) throw Failure("--eps must be positive", 2);
      if (trials < 0) throw Failure("--trials must be >= 0", 2);
      auto bound = lln_bound(r, p, eps);
      Rational exact = range_prob(r, r_q * (p - eps), r_q * (p + eps), p);
      std::string coverage = "-", coverage_dec = "-";
      if (trials > 0) {
        auto ts = TestSequence::fresh_atoms(r, p);
        auto freqs = simulate_frequencies(ts, static_cast<std::size_t>(trials), seed,
                                          static_cast<unsigned>(positive("--threads", threads)));
        std::size_t inside = 0;
        for (const auto& nu : freqs) inside += abs(nu - p) <= eps ? 1 : 0;
        Rational c = ratio(Integer(static_cast<unsigned long>(inside)), Integer(static_cast<unsigned long>(trials)));
        coverage = to_string(c);
        coverage_dec = to_decimal(c);
      }
      out << table({{"r", "bound", "exact_prob", "empirical_coverage", "trials", "seed"},
                    {std::to_string(r), to_string(bound), to_string(exact), coverage, std::to_string(trials),
                     std::to_string(seed)},
                    {"decimal", to_decimal(bound), to_decimal(exact), coverage_dec, "", ""}});
    } else if (classical_cmd->parsed()) {
      std::vector<std::string> texts;
      std::istringstream lines(read_input(set_file, stdin_text));
      for (std::string line; std::getline(lines, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        texts.push_back(line);
      }
      if (texts.empty()) throw Failure("complete set file has no formulas");
      texts.push_back(event);
      auto f = parse_formulas(texts, atom_list);
      auto a = f.sentences.back();
      f.sentences.pop_back();
      try {
        CompleteSet cs(f.sentences);
        auto c = classical_count(a, cs);
        out << c.favorable << " " << c.total << " " << to_string(c.probability()) << " "
            << to_decimal(c.probability()) << "\n";
      } catch (const ClassicalError& e) {
        throw Failure(std::string(to_string(e.kind())) + ": " + e.what());
      }
    } else if (qnum_cmd->parsed()) {
      auto h = positive("--horizon", horizon);
      try {
        if (q_freq->parsed()) {
          auto n = positive("--n", n_index);
          out << "frequency: " << number(qnum::part_frequency(parse_index_set(set_text), n)) << "\n";
        } else if (q_member->parsed()) {
          out << "verdict: " << qnum::to_string(qnum::filter_membership(parse_index_set(set_text), h)) << "\n";
        } else if (q_classify_cmd->parsed()) {
          auto m = qnum::q_classify(parse_sequence(seq_x, h), h);
          out << "class: " << qnum::to_string(m.kind);
          if (m.kind == qnum::Magnitude::Kind::Unknown) out << "(|x|=" << to_string(m.sample) << "@horizon=" << h << ")";
          out << "\n";
        } else {
          auto x = parse_sequence(seq_x, h), y = parse_sequence(seq_y, h);
          qnum::Verdict v = q_equal_cmd->parsed() ? qnum::q_equal(x, y, h)
                            : q_less_cmd->parsed() ? qnum::q_less(x, y, h)
                                                   : qnum::infinitely_close(x, y, h);
          out << "verdict: " << qnum::to_string(v) << "\n";
        }
      } catch (const DescriptorError& e) {
        throw Failure(e.what());
      } catch (const qnum::QNumberError& e) {
        throw Failure(e.what());
      }
    }
  } catch (const Failure& e) {
    report.status = CommandReport::Status::Error;
    report.exit_code = e.code();
    report.message = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    report.status = CommandReport::Status::Error;
    report.exit_code = 1;
    report.message = std::string("error: ") + e.what() + "\n";
  }
  report.payload = out.str();
  return report;
}

}  // namespace problogic::cli
