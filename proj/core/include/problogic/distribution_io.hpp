#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "problogic/bfunc.hpp"

namespace problogic {

class DistributionError : public std::runtime_error {
 public:
  enum class Kind { Malformed, BadBitstring, DuplicateMinterm, NegativeMass, SumNotOne, Empty };
  DistributionError(Kind kind, std::size_t line, const std::string& message)
      : std::runtime_error(line ? "distribution line " + std::to_string(line) + ": " + message : message),
        kind_(kind),
        line_(line) {}
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(DistributionError::Kind kind);

/// Reads `<bitstring> <p/q>` lines (e.g. `101 1/8`); omitted minterms get
/// mass 0. The basic-set size is `atoms` if given, else the width of the
/// first bitstring. Blank lines, `#` comments and trailing whitespace are ignored.
BFunction parse_distribution(std::string_view text, std::optional<std::size_t> atoms = std::nullopt);

BFunction load_distribution(const std::string& path, std::optional<std::size_t> atoms = std::nullopt);

/// Inverse of parse_distribution, listing only positive masses.
std::string write_distribution(const BFunction& bf);

}  // namespace problogic
