#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "problogic/rational.hpp"

namespace problogic::qnum {

/// Univariate polynomial in the index n, coefficients lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
  static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational at(const Rational& n) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// How a rational function behaves as n grows.
enum class Limit { Zero, Finite, PlusInfinity, MinusInfinity };

/// num/den with den nonzero and monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(Rational c) { return {Polynomial::constant(std::move(c)), Polynomial::constant(Rational(1))}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Sign for all sufficiently large n.
  int eventual_sign() const;
  Limit limit() const;
  /// Value at n, with 0 where the denominator vanishes.
  Rational at(std::uint64_t n) const;

  RationalFunction reciprocal() const;
  RationalFunction abs() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// A sequence that, from some index on, equals pieces[n mod P] evaluated at n.
class EventualForm {
 public:
  EventualForm() : pieces_(1) {}
  explicit EventualForm(std::vector<RationalFunction> pieces);
  static EventualForm constant(Rational c) { return EventualForm({RationalFunction::constant(std::move(c))}); }

  std::size_t period() const { return pieces_.size(); }
  const RationalFunction& piece(std::uint64_t n) const { return pieces_[n % pieces_.size()]; }
  const std::vector<RationalFunction>& pieces() const { return pieces_; }
  bool is_zero() const;
  /// Present when every residue class is the same constant.
  std::optional<Rational> constant_value() const;

  EventualForm reciprocal() const;
  EventualForm abs() const;

  friend EventualForm operator+(const EventualForm& a, const EventualForm& b);
  friend EventualForm operator*(const EventualForm& a, const EventualForm& b);
  friend EventualForm operator-(const EventualForm& a);

 private:
  void compress();
  std::vector<RationalFunction> pieces_;
};

}  // namespace problogic::qnum
