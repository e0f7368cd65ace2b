#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "problogic/qnum/eventual_form.hpp"
#include "problogic/qnum/index_set.hpp"
#include "problogic/qnum/verdict.hpp"
#include "problogic/rational.hpp"

namespace problogic::qnum {

class QNumberError : public std::runtime_error {
 public:
  enum class Kind { ReciprocalOfInfinitesimalOrZero, BadArity, BadIndex };
  QNumberError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {
struct Symbolic;
}

struct Magnitude {
  enum class Kind { Infinitesimal, Appreciable, Infinite, Mixed, Unknown };
  Kind kind = Kind::Unknown;
  /// Unknown only: |x_horizon|.
  std::uint64_t horizon = 0;
  Rational sample;
};

/// One representative sequence x_1, x_2, ... of a Q-number.
///
/// Besides the pointwise map every value carries a symbolic description of
/// its tail: a polynomial whose variables are opaque input sequences and
/// whose coefficients are eventually periodic rational functions of n.
/// Values built only from structured inputs have no variables, and their
/// relations are decided exactly.
class QNumber {
 public:
  using Sequence = std::function<Rational(std::uint64_t)>;

  static QNumber standard(Rational a);
  /// ⟨1/n⟩
  static QNumber reciprocal_index();
  /// ⟨n⟩
  static QNumber index();
  /// ⟨num(n)/den(n)⟩, 0 where den(n) = 0.
  static QNumber rational_function(Polynomial num, Polynomial den);
  static QNumber eventual(EventualForm form);
  /// Values preamble[0..], then period repeating. Period must be nonempty.
  static QNumber periodic(std::vector<Rational> preamble, std::vector<Rational> period);
  /// An arbitrary pure sequence; relations involving it are only decided
  /// when it cancels symbolically.
  static QNumber opaque(Sequence seq);

  /// Same Q-number with finitely many values replaced.
  QNumber with_overrides(std::map<std::uint64_t, Rational> overrides) const;

  /// x_n for n >= 1.
  Rational at(std::uint64_t n) const;
  /// The standard value when the tail is a known constant.
  std::optional<Rational> standard_value() const;
  /// True when no opaque sequence is involved.
  bool structured() const;
  /// The tail description for structured values.
  std::optional<EventualForm> eventual_form() const;

  friend QNumber operator+(const QNumber& a, const QNumber& b);
  friend QNumber operator-(const QNumber& a, const QNumber& b);
  friend QNumber operator*(const QNumber& a, const QNumber& b);
  friend QNumber operator-(const QNumber& a);
  friend QNumber abs(const QNumber& a);
  /// Throws QNumberError when 0 < |x| is not established.
  friend QNumber reciprocal(const QNumber& x, std::uint64_t horizon);

  friend Verdict q_equal(const QNumber& x, const QNumber& y, std::uint64_t horizon);
  friend Verdict q_less(const QNumber& x, const QNumber& y, std::uint64_t horizon);
  friend Magnitude q_classify(const QNumber& x, std::uint64_t horizon);

 private:
  QNumber(Sequence seq, std::shared_ptr<const detail::Symbolic> form);
  static QNumber fresh_leaf(Sequence seq);

  std::shared_ptr<const Sequence> seq_;
  std::shared_ptr<const detail::Symbolic> form_;
};

QNumber reciprocal(const QNumber& x, std::uint64_t horizon = kDefaultHorizon);

enum class QOp { Add, Multiply, Negate, Reciprocal };

/// Pointwise lift of a field operation. Throws QNumberError on the wrong
/// number of arguments or a reciprocal whose precondition fails.
QNumber q_lift(QOp op, std::span<const QNumber> args, std::uint64_t horizon = kDefaultHorizon);

/// {n : x_n = y_n} ∈ Φix
Verdict q_equal(const QNumber& x, const QNumber& y, std::uint64_t horizon = kDefaultHorizon);
/// {n : x_n < y_n} ∈ Φix
Verdict q_less(const QNumber& x, const QNumber& y, std::uint64_t horizon = kDefaultHorizon);

std::string to_string(Magnitude::Kind kind);

Magnitude q_classify(const QNumber& x, std::uint64_t horizon = kDefaultHorizon);

/// x ≈ y: equal, or their difference is infinitesimal.
Verdict infinitely_close(const QNumber& x, const QNumber& y, std::uint64_t horizon = kDefaultHorizon);

}  // namespace problogic::qnum
