#include "problogic/qnum/qnumber.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

namespace problogic::qnum {

namespace detail {

// product of opaque leaves, (leaf id, exponent) sorted by id
using Monomial = std::vector<std::pair<std::uint64_t, unsigned>>;

struct Symbolic {
  std::map<Monomial, EventualForm> terms;

  bool is_zero() const { return terms.empty(); }
  bool structured() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty()); }
  EventualForm tail() const {
    auto it = terms.find(Monomial{});
    return it == terms.end() ? EventualForm::constant(Rational(0)) : it->second;
  }
};

}  // namespace detail

namespace {

using detail::Monomial;
using detail::Symbolic;

std::atomic<std::uint64_t> next_leaf{1};

void accumulate(Symbolic& s, const Monomial& m, const EventualForm& f) {
  auto it = s.terms.find(m);
  if (it == s.terms.end()) {
    if (!f.is_zero()) s.terms.emplace(m, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) s.terms.erase(it);
}

std::shared_ptr<const Symbolic> from_form(EventualForm f) {
  auto s = std::make_shared<Symbolic>();
  accumulate(*s, {}, f);
  return s;
}

std::shared_ptr<const Symbolic> add(const Symbolic& a, const Symbolic& b) {
  auto s = std::make_shared<Symbolic>(a);
  for (const auto& [m, f] : b.terms) accumulate(*s, m, f);
  return s;
}

std::shared_ptr<const Symbolic> negate(const Symbolic& a) {
  auto s = std::make_shared<Symbolic>();
  for (const auto& [m, f] : a.terms) s->terms.emplace(m, -f);
  return s;
}

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::shared_ptr<const Symbolic> multiply(const Symbolic& a, const Symbolic& b) {
  auto s = std::make_shared<Symbolic>();
  for (const auto& [ma, fa] : a.terms) {
    for (const auto& [mb, fb] : b.terms) accumulate(*s, times(ma, mb), fa * fb);
  }
  return s;
}

void require_index(std::uint64_t n) {
  if (n == 0) throw QNumberError(QNumberError::Kind::BadIndex, "Q-number indices start at 1");
}

void require_horizon(std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be >= 1");
}

Verdict evidence(const QNumber& x, const QNumber& y, std::uint64_t horizon, bool strict) {
  auto set = IndexSet::opaque([x, y, strict](std::uint64_t n) {
    return strict ? x.at(n) < y.at(n) : x.at(n) == y.at(n);
  });
  return filter_membership(set, horizon);
}

}  // namespace

QNumber::QNumber(Sequence seq, std::shared_ptr<const detail::Symbolic> form)
    : seq_(std::make_shared<const Sequence>(std::move(seq))), form_(std::move(form)) {}

QNumber QNumber::fresh_leaf(Sequence seq) {
  auto s = std::make_shared<Symbolic>();
  s->terms.emplace(Monomial{{next_leaf.fetch_add(1), 1}}, EventualForm::constant(Rational(1)));
  return QNumber(std::move(seq), std::move(s));
}

QNumber QNumber::standard(Rational a) {
  a.canonicalize();
  return QNumber([a](std::uint64_t) { return a; }, from_form(EventualForm::constant(a)));
}

QNumber QNumber::reciprocal_index() {
  return rational_function(Polynomial::constant(Rational(1)), Polynomial::identity());
}

QNumber QNumber::index() { return rational_function(Polynomial::identity(), Polynomial::constant(Rational(1))); }

QNumber QNumber::rational_function(Polynomial num, Polynomial den) {
  return eventual(EventualForm({RationalFunction(std::move(num), std::move(den))}));
}

QNumber QNumber::eventual(EventualForm form) {
  auto seq = [form](std::uint64_t n) { return form.piece(n).at(n); };
  return QNumber(std::move(seq), from_form(std::move(form)));
}

QNumber QNumber::periodic(std::vector<Rational> preamble, std::vector<Rational> period) {
  if (period.empty()) throw std::invalid_argument("periodic Q-number needs a nonempty period");
  for (auto& v : preamble) v.canonicalize();
  for (auto& v : period) v.canonicalize();
  std::size_t p = preamble.size();
  std::size_t len = period.size();
  std::vector<RationalFunction> pieces;
  for (std::size_t r = 0; r < len; ++r) {
    // n ≡ r (mod len) and n > p picks period[(n - 1 - p) mod len]
    std::size_t slot = ((r + len) - ((1 + p) % len)) % len;
    pieces.push_back(RationalFunction::constant(period[slot]));
  }
  auto seq = [preamble = std::move(preamble), period = std::move(period)](std::uint64_t n) {
    if (n <= preamble.size()) return preamble[n - 1];
    return period[(n - 1 - preamble.size()) % period.size()];
  };
  return QNumber(std::move(seq), from_form(EventualForm(std::move(pieces))));
}

QNumber QNumber::opaque(Sequence seq) {
  if (!seq) throw std::invalid_argument("opaque Q-number needs a sequence");
  return fresh_leaf(std::move(seq));
}

QNumber QNumber::with_overrides(std::map<std::uint64_t, Rational> overrides) const {
  for (auto& [n, v] : overrides) {
    require_index(n);
    v.canonicalize();
  }
  auto base = seq_;
  auto seq = [base, overrides = std::move(overrides)](std::uint64_t n) {
    auto it = overrides.find(n);
    return it != overrides.end() ? it->second : (*base)(n);
  };
  return QNumber(std::move(seq), form_);
}

Rational QNumber::at(std::uint64_t n) const {
  require_index(n);
  return (*seq_)(n);
}

std::optional<Rational> QNumber::standard_value() const {
  if (!form_->structured()) return std::nullopt;
  return form_->tail().constant_value();
}

bool QNumber::structured() const { return form_->structured(); }

std::optional<EventualForm> QNumber::eventual_form() const {
  if (!form_->structured()) return std::nullopt;
  return form_->tail();
}

QNumber operator+(const QNumber& a, const QNumber& b) {
  auto sa = a.seq_, sb = b.seq_;
  return QNumber([sa, sb](std::uint64_t n) { return Rational((*sa)(n) + (*sb)(n)); }, add(*a.form_, *b.form_));
}

QNumber operator*(const QNumber& a, const QNumber& b) {
  auto sa = a.seq_, sb = b.seq_;
  return QNumber([sa, sb](std::uint64_t n) { return Rational((*sa)(n) * (*sb)(n)); },
                 multiply(*a.form_, *b.form_));
}

QNumber operator-(const QNumber& a) {
  auto sa = a.seq_;
  return QNumber([sa](std::uint64_t n) { return Rational(-(*sa)(n)); }, negate(*a.form_));
}

QNumber operator-(const QNumber& a, const QNumber& b) { return a + (-b); }

QNumber abs(const QNumber& a) {
  auto sa = a.seq_;
  auto seq = [sa](std::uint64_t n) { return Rational(::abs((*sa)(n))); };
  if (a.form_->structured()) return QNumber(std::move(seq), from_form(a.form_->tail().abs()));
  return QNumber::fresh_leaf(std::move(seq));
}

QNumber reciprocal(const QNumber& x, std::uint64_t horizon) {
  auto positive = q_less(QNumber::standard(Rational(0)), abs(x), horizon);
  if (!positive.is_yes()) {
    throw QNumberError(QNumberError::Kind::ReciprocalOfInfinitesimalOrZero,
                       "reciprocal needs 0 < |x|, got " + to_string(positive));
  }
  auto sx = x.seq_;
  auto seq = [sx](std::uint64_t n) {
    Rational v = (*sx)(n);
    return v == 0 ? Rational(0) : Rational(1 / v);
  };
  if (x.form_->structured()) return QNumber(std::move(seq), from_form(x.form_->tail().reciprocal()));
  return QNumber::fresh_leaf(std::move(seq));
}

QNumber q_lift(QOp op, std::span<const QNumber> args, std::uint64_t horizon) {
  std::size_t arity = (op == QOp::Add || op == QOp::Multiply) ? 2 : 1;
  if (args.size() != arity) {
    throw QNumberError(QNumberError::Kind::BadArity,
                       "operation takes " + std::to_string(arity) + " arguments, got " + std::to_string(args.size()));
  }
  switch (op) {
    case QOp::Add:
      return args[0] + args[1];
    case QOp::Multiply:
      return args[0] * args[1];
    case QOp::Negate:
      return -args[0];
    case QOp::Reciprocal:
      break;
  }
  return reciprocal(args[0], horizon);
}

Verdict q_equal(const QNumber& x, const QNumber& y, std::uint64_t horizon) {
  require_horizon(horizon);
  auto diff = add(*x.form_, *negate(*y.form_));
  if (diff->is_zero()) return Verdict::yes();
  // a nonzero rational function vanishes only finitely often, so each
  // nonzero residue class is a positive-density disagreement
  if (diff->structured()) return Verdict::no();
  return evidence(x, y, horizon, false);
}

Verdict q_less(const QNumber& x, const QNumber& y, std::uint64_t horizon) {
  require_horizon(horizon);
  auto diff = add(*y.form_, *negate(*x.form_));
  if (diff->is_zero()) return Verdict::no();
  if (!diff->structured()) return evidence(x, y, horizon, true);
  auto tail = diff->tail();
  const auto& pieces = tail.pieces();
  bool all_positive = std::all_of(pieces.begin(), pieces.end(),
                                  [](const RationalFunction& f) { return f.eventual_sign() > 0; });
  return all_positive ? Verdict::yes() : Verdict::no();
}

std::string to_string(Magnitude::Kind kind) {
  switch (kind) {
    case Magnitude::Kind::Infinitesimal:
      return "infinitesimal";
    case Magnitude::Kind::Appreciable:
      return "appreciable";
    case Magnitude::Kind::Infinite:
      return "infinite";
    case Magnitude::Kind::Mixed:
      return "mixed";
    case Magnitude::Kind::Unknown:
      break;
  }
  return "unknown";
}

Magnitude q_classify(const QNumber& x, std::uint64_t horizon) {
  require_horizon(horizon);
  if (!x.form_->structured()) {
    return Magnitude{Magnitude::Kind::Unknown, horizon, Rational(::abs(x.at(horizon)))};
  }
  bool zero = false, finite = false, infinite = false;
  auto tail = x.form_->tail();
  for (const auto& f : tail.pieces()) {
    switch (f.limit()) {
      case Limit::Zero:
        zero = true;
        break;
      case Limit::Finite:
        finite = true;
        break;
      case Limit::PlusInfinity:
      case Limit::MinusInfinity:
        infinite = true;
        break;
    }
  }
  Magnitude out;
  if (zero + finite + infinite > 1) {
    out.kind = Magnitude::Kind::Mixed;
  } else if (zero) {
    out.kind = Magnitude::Kind::Infinitesimal;
  } else if (finite) {
    out.kind = Magnitude::Kind::Appreciable;
  } else {
    out.kind = Magnitude::Kind::Infinite;
  }
  return out;
}

Verdict infinitely_close(const QNumber& x, const QNumber& y, std::uint64_t horizon) {
  auto same = q_equal(x, y, horizon);
  if (same.is_yes()) return same;
  auto m = q_classify(x - y, horizon);
  if (m.kind == Magnitude::Kind::Unknown) return same;
  return m.kind == Magnitude::Kind::Infinitesimal ? Verdict::yes() : Verdict::no();
}

}  // namespace problogic::qnum
