#pragma once

#include <cstdint>
#include <string>

#include "problogic/rational.hpp"

namespace problogic::qnum {

/// Horizon used for prefix-frequency evidence when no other is given.
inline constexpr std::uint64_t kDefaultHorizon = 10'000;

/// Answer to a density-filter membership question. Yes/No are only given
/// when the structure of the set settles its limit density; otherwise the
/// answer is Unknown and carries the frequency observed up to `horizon`.
struct Verdict {
  enum class Kind { Yes, No, Unknown };

  Kind kind = Kind::Unknown;
  std::uint64_t horizon = 0;
  Rational frequency;

  static Verdict yes() { return Verdict{Kind::Yes, 0, Rational(0)}; }
  static Verdict no() { return Verdict{Kind::No, 0, Rational(0)}; }
  static Verdict unknown(std::uint64_t horizon, Rational frequency) {
    return Verdict{Kind::Unknown, horizon, std::move(frequency)};
  }

  bool is_yes() const { return kind == Kind::Yes; }
  bool is_no() const { return kind == Kind::No; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

/// `yes`, `no`, or `unknown(<p/q>@horizon=<H>)`.
std::string to_string(const Verdict& v);

}  // namespace problogic::qnum
