#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "problogic/qnum/qnumber.hpp"

namespace problogic::cli {

class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index sets:
///   all | empty | squares
///   finite 1,2,3 | cofinite 1,2
///   multiples <k>
///   periodic <bits> | periodic <preamble bits>:<period bits>
/// `periodic 01` is the even numbers.
qnum::IndexSet parse_index_set(std::string_view text);

/// Sequences: + - * / and parentheses over
///   <number> | const <p/q> | recip-n | lin | isqrt | periodic <v>,<v>,...
/// `isqrt` is ⌊√n⌋, an opaque sequence. Division takes a reciprocal and
/// needs a nonzero divisor at `horizon`.
qnum::QNumber parse_sequence(std::string_view text, std::uint64_t horizon = qnum::kDefaultHorizon);

}  // namespace problogic::cli
