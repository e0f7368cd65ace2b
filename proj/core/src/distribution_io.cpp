#include "problogic/distribution_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace problogic {

const char* to_string(DistributionError::Kind kind) {
  switch (kind) {
    case DistributionError::Kind::Malformed: return "Malformed";
    case DistributionError::Kind::BadBitstring: return "BadBitstring";
    case DistributionError::Kind::DuplicateMinterm: return "DuplicateMinterm";
    case DistributionError::Kind::NegativeMass: return "NegativeMass";
    case DistributionError::Kind::SumNotOne: return "SumNotOne";
    case DistributionError::Kind::Empty: return "Empty";
  }
  return "?";
}

BFunction parse_distribution(std::string_view text, std::optional<std::size_t> atoms) {
  using Kind = DistributionError::Kind;
  std::vector<Rational> masses;
  std::vector<bool> seen;
  std::optional<std::size_t> width = atoms;
  auto allocate = [&] {
    if (*width == 0 || *width > kMaxAtoms) {
      throw DistributionError(Kind::BadBitstring, 0, "basic-set size must be between 1 and " + std::to_string(kMaxAtoms));
    }
    masses.assign(std::size_t{1} << *width, Rational(0));
    seen.assign(masses.size(), false);
  };
  if (width) allocate();

  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream fields(line);
    std::string bits, mass_text, extra;
    if (!(fields >> bits) || bits.front() == '#') continue;
    if (!(fields >> mass_text) || (fields >> extra)) {
      throw DistributionError(Kind::Malformed, line_no, "expected '<bitstring> <p/q>'");
    }
    for (char c : bits) {
      if (c != '0' && c != '1') throw DistributionError(Kind::BadBitstring, line_no, "bitstring must be 0s and 1s");
    }
    if (!width) {
      width = bits.size();
      allocate();
    }
    if (bits.size() != *width) {
      throw DistributionError(Kind::BadBitstring, line_no,
                              "bitstring width " + std::to_string(bits.size()) + " != " + std::to_string(*width));
    }
    Rational mass;
    try {
      mass = parse_rational(mass_text);
    } catch (const std::invalid_argument& e) {
      throw DistributionError(Kind::Malformed, line_no, e.what());
    }
    if (mass < 0) throw DistributionError(Kind::NegativeMass, line_no, "negative mass " + to_string(mass));
    std::uint64_t w = Valuation::parse(bits).minterm();
    if (seen[w]) throw DistributionError(Kind::DuplicateMinterm, line_no, "minterm " + bits + " listed twice");
    seen[w] = true;
    masses[w] = mass;
  }
  if (!width) throw DistributionError(Kind::Empty, 0, "distribution lists no minterms");

  Rational total = 0;
  for (const auto& m : masses) total += m;
  if (total != 1) throw DistributionError(Kind::SumNotOne, 0, "masses sum to " + to_string(total) + ", not 1");
  return BFunction(*width, std::move(masses));
}

BFunction load_distribution(const std::string& path, std::optional<std::size_t> atoms) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution(buffer.str(), atoms);
}

std::string write_distribution(const BFunction& bf) {
  std::string out;
  for (std::size_t w = 0; w < bf.minterms(); ++w) {
    if (bf.mass(w) == 0) continue;
    out += Valuation::from_minterm(w, bf.atoms()).to_string() + " " + to_string(bf.mass(w)) + "\n";
  }
  return out;
}

}  // namespace problogic
