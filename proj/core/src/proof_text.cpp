#include "problogic/proof_text.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "problogic/syntax.hpp"

namespace problogic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::size_t> to_index(const std::string& w) {
  if (w.empty() || w.size() > 18) return std::nullopt;
  for (char c : w)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return static_cast<std::size_t>(std::stoull(w));
}

Sentence parse_at(std::string_view formula, AtomTable& atoms, std::size_t line) {
  try {
    return parse_into(formula, atoms);
  } catch (const SyntaxError& e) {
    throw ProofTextError(line, e.what());
  }
}

}  // namespace

Deduction read_proof_text(std::string_view text, AtomTable& atoms) {
  std::vector<Sentence> hypotheses;
  std::vector<DeductionLine> lines;

  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.substr(0, 7) == "assume " || line == "assume") {
      if (!lines.empty()) throw ProofTextError(line_no, "hypotheses must be declared before the first numbered line");
      hypotheses.push_back(parse_at(line.substr(6), atoms, line_no));
      continue;
    }

    auto dot = line.find('.');
    auto semi = line.find(';');
    if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot) {
      throw ProofTextError(line_no, "expected '<n>. <formula> ; <justification>'");
    }
    auto number = to_index(std::string(trim(line.substr(0, dot))));
    if (!number) throw ProofTextError(line_no, "bad line number");
    if (*number != lines.size() + 1) {
      throw ProofTextError(line_no, "expected line number " + std::to_string(lines.size() + 1));
    }
    Sentence sentence = parse_at(line.substr(dot + 1, semi - dot - 1), atoms, line_no);

    auto just = words(line.substr(semi + 1));
    if (just.empty()) throw ProofTextError(line_no, "missing justification");
    if (just[0] == "axiom" && just.size() == 2) {
      AxiomSchema schema;
      if (just[1] == "A1") {
        schema = AxiomSchema::A1;
      } else if (just[1] == "A2") {
        schema = AxiomSchema::A2;
      } else if (just[1] == "A3") {
        schema = AxiomSchema::A3;
      } else {
        throw ProofTextError(line_no, "unknown axiom '" + just[1] + "'");
      }
      lines.push_back({sentence, AxiomJustification{schema, {}}});
    } else if (just[0] == "hyp" && just.size() == 2 && to_index(just[1])) {
      lines.push_back({sentence, HypothesisJustification{*to_index(just[1])}});
    } else if (just[0] == "mp" && just.size() == 3 && to_index(just[1]) && to_index(just[2])) {
      lines.push_back({sentence, ModusPonensJustification{*to_index(just[1]), *to_index(just[2])}});
    } else {
      throw ProofTextError(line_no, "malformed justification '" + std::string(trim(line.substr(semi + 1))) + "'");
    }
  }

  if (lines.empty()) throw ProofTextError(line_no, "proof has no numbered lines");
  Sentence goal = lines.back().sentence;
  return Deduction{std::move(hypotheses), std::move(lines), std::move(goal)};
}

std::string write_proof_text(const Deduction& d, const AtomTable& atoms) {
  std::string out;
  for (const auto& h : d.hypotheses) out += "assume " + format_formula(h, atoms) + "\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    const auto& line = d.lines[i];
    out += std::to_string(i + 1) + ". " + format_formula(line.sentence, atoms) + " ; ";
    if (const auto* ax = std::get_if<AxiomJustification>(&line.justification)) {
      out += std::string("axiom ") + to_string(ax->schema);
    } else if (const auto* hyp = std::get_if<HypothesisJustification>(&line.justification)) {
      out += "hyp " + std::to_string(hyp->index);
    } else {
      const auto& mp = std::get<ModusPonensJustification>(line.justification);
      out += "mp " + std::to_string(mp.major) + " " + std::to_string(mp.minor);
    }
    out += "\n";
  }
  return out;
}

}  // namespace problogic
