#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "problogic/deduction.hpp"
#include "problogic/sentence.hpp"

namespace problogic {

class ProofTextError : public std::runtime_error {
 public:
  ProofTextError(std::size_t line, const std::string& message)
      : std::runtime_error("proof text line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line-based proof text:
///
///   # comment
///   assume <formula>              hypothesis 0, 1, ... in order of appearance
///   <n>. <formula> ; axiom A1|A2|A3
///   <n>. <formula> ; hyp <k>      k is a 0-based hypothesis index
///   <n>. <formula> ; mp <i> <j>   line i proves X -> Y, line j proves X
///
/// Numbered lines count from 1 without gaps; the goal is the last line.
/// Blank lines and trailing whitespace are ignored. Atom names are interned
/// into `atoms`.
Deduction read_proof_text(std::string_view text, AtomTable& atoms);

std::string write_proof_text(const Deduction& d, const AtomTable& atoms);

}  // namespace problogic
