#include "problogic/qnum/eventual_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace problogic::qnum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::at(const Rational& n) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  auto out = a.coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

namespace {

int sign(const Rational& x) { return sgn(x); }

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator polynomial");
  if (num.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  auto scale = Polynomial::constant(Rational(1) / den.leading());
  num_ = num * scale;
  den_ = den * scale;
}

int RationalFunction::eventual_sign() const {
  if (num_.is_zero()) return 0;
  return sign(num_.leading());
}

Limit RationalFunction::limit() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return Limit::Zero;
  if (num_.degree() == den_.degree()) return Limit::Finite;
  return sign(num_.leading()) > 0 ? Limit::PlusInfinity : Limit::MinusInfinity;
}

Rational RationalFunction::at(std::uint64_t n) const {
  Rational x{Integer(static_cast<unsigned long>(n))};
  Rational d = den_.at(x);
  if (d == 0) return Rational(0);
  Rational out = num_.at(x) / d;
  out.canonicalize();
  return out;
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) return {};
  return {den_, num_};
}

RationalFunction RationalFunction::abs() const { return eventual_sign() < 0 ? -*this : *this; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

EventualForm::EventualForm(std::vector<RationalFunction> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("eventual form needs at least one piece");
  compress();
}

namespace {

bool same(const RationalFunction& a, const RationalFunction& b) { return (a + -b).is_zero(); }

template <typename Op>
EventualForm zip(const EventualForm& a, const EventualForm& b, Op op) {
  std::size_t period = std::lcm(a.period(), b.period());
  std::vector<RationalFunction> out;
  out.reserve(period);
  for (std::size_t r = 0; r < period; ++r) out.push_back(op(a.piece(r), b.piece(r)));
  return EventualForm(std::move(out));
}

template <typename Op>
EventualForm map(const EventualForm& a, Op op) {
  std::vector<RationalFunction> out;
  out.reserve(a.period());
  for (const auto& p : a.pieces()) out.push_back(op(p));
  return EventualForm(std::move(out));
}

}  // namespace

void EventualForm::compress() {
  // shrink to the smallest divisor of the period that still describes the sequence
  std::size_t p = pieces_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = same(pieces_[i], pieces_[i % d]);
    if (ok) {
      pieces_.resize(d);
      return;
    }
  }
}

bool EventualForm::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const RationalFunction& f) { return f.is_zero(); });
}

std::optional<Rational> EventualForm::constant_value() const {
  if (pieces_.size() != 1) return std::nullopt;
  const auto& f = pieces_[0];
  if (f.is_zero()) return Rational(0);
  if (f.num().degree() != 0 || f.den().degree() != 0) return std::nullopt;
  return f.num().leading() / f.den().leading();
}

EventualForm EventualForm::reciprocal() const {
  return map(*this, [](const RationalFunction& f) { return f.reciprocal(); });
}

EventualForm EventualForm::abs() const {
  return map(*this, [](const RationalFunction& f) { return f.abs(); });
}

EventualForm operator+(const EventualForm& a, const EventualForm& b) {
  return zip(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x + y; });
}

EventualForm operator*(const EventualForm& a, const EventualForm& b) {
  return zip(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x * y; });
}

EventualForm operator-(const EventualForm& a) {
  return map(a, [](const RationalFunction& f) { return -f; });
}

}  // namespace problogic::qnum
