#include "problogic/qnum/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace problogic::qnum {

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Yes:
      return "yes";
    case Verdict::Kind::No:
      return "no";
    case Verdict::Kind::Unknown:
      break;
  }
  return "unknown(" + problogic::to_string(v.frequency) + "@horizon=" + std::to_string(v.horizon) + ")";
}

namespace {

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> list) {
  for (auto n : list) {
    if (n == 0) throw std::invalid_argument("index sets contain positive integers only");
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

bool listed_contains(const std::vector<std::uint64_t>& list, std::uint64_t n) {
  return std::binary_search(list.begin(), list.end(), n);
}

std::uint64_t listed_upto(const std::vector<std::uint64_t>& list, std::uint64_t n) {
  return static_cast<std::uint64_t>(std::upper_bound(list.begin(), list.end(), n) - list.begin());
}

}  // namespace

IndexSet IndexSet::finite(std::vector<std::uint64_t> members) {
  IndexSet s;
  s.kind_ = Kind::Finite;
  s.listed_ = normalized(std::move(members));
  return s;
}

IndexSet IndexSet::cofinite(std::vector<std::uint64_t> excluded) {
  IndexSet s;
  s.kind_ = Kind::Cofinite;
  s.listed_ = normalized(std::move(excluded));
  return s;
}

IndexSet IndexSet::periodic(std::vector<bool> preamble, std::vector<bool> period) {
  if (period.empty()) throw std::invalid_argument("periodic index set needs a nonempty period");
  IndexSet s;
  s.kind_ = Kind::EventuallyPeriodic;
  s.preamble_ = std::move(preamble);
  s.period_ = std::move(period);
  return s;
}

IndexSet IndexSet::opaque(std::function<bool(std::uint64_t)> predicate) {
  if (!predicate) throw std::invalid_argument("opaque index set needs a predicate");
  IndexSet s;
  s.kind_ = Kind::Opaque;
  s.predicate_ = std::move(predicate);
  return s;
}

IndexSet IndexSet::multiples(std::uint64_t step) {
  if (step == 0) throw std::invalid_argument("step must be positive");
  std::vector<bool> period(step, false);
  period[step - 1] = true;
  return periodic({}, std::move(period));
}

bool IndexSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  switch (kind_) {
    case Kind::Finite:
      return listed_contains(listed_, n);
    case Kind::Cofinite:
      return !listed_contains(listed_, n);
    case Kind::EventuallyPeriodic:
      if (n <= preamble_.size()) return preamble_[n - 1];
      return period_[(n - 1 - preamble_.size()) % period_.size()];
    case Kind::Opaque:
      return predicate_(n);
  }
  return false;
}

std::optional<Rational> IndexSet::density() const {
  switch (kind_) {
    case Kind::Finite:
      return Rational(0);
    case Kind::Cofinite:
      return Rational(1);
    case Kind::EventuallyPeriodic: {
      auto ones = std::count(period_.begin(), period_.end(), true);
      return ratio(static_cast<long>(ones), static_cast<long>(period_.size()));
    }
    case Kind::Opaque:
      break;
  }
  return std::nullopt;
}

IndexSet IndexSet::as_periodic() const {
  switch (kind_) {
    case Kind::Finite:
    case Kind::Cofinite: {
      bool inside = kind_ == Kind::Cofinite;
      std::vector<bool> pre(listed_.empty() ? 0 : listed_.back(), inside);
      for (auto n : listed_) pre[n - 1] = !inside;
      return periodic(std::move(pre), {inside});
    }
    case Kind::EventuallyPeriodic:
      return *this;
    case Kind::Opaque:
      break;
  }
  throw std::logic_error("opaque index set has no periodic form");
}

IndexSet IndexSet::complement() const {
  switch (kind_) {
    case Kind::Finite:
      return cofinite(listed_);
    case Kind::Cofinite:
      return finite(listed_);
    case Kind::EventuallyPeriodic: {
      auto pre = preamble_;
      auto per = period_;
      pre.flip();
      per.flip();
      return periodic(std::move(pre), std::move(per));
    }
    case Kind::Opaque:
      break;
  }
  auto pred = predicate_;
  return opaque([pred](std::uint64_t n) { return !pred(n); });
}

IndexSet IndexSet::combine(const IndexSet& a, const IndexSet& b, bool (*op)(bool, bool)) {
  if (!a.decidable() || !b.decidable()) {
    return opaque([a, b, op](std::uint64_t n) { return op(a.contains(n), b.contains(n)); });
  }
  auto pa = a.as_periodic();
  auto pb = b.as_periodic();
  std::size_t pre_len = std::max(pa.preamble_.size(), pb.preamble_.size());
  std::size_t per_len = std::lcm(pa.period_.size(), pb.period_.size());
  std::vector<bool> pre(pre_len), per(per_len);
  for (std::size_t i = 0; i < pre_len; ++i) pre[i] = op(pa.contains(i + 1), pb.contains(i + 1));
  for (std::size_t i = 0; i < per_len; ++i) {
    auto n = pre_len + i + 1;
    per[i] = op(pa.contains(n), pb.contains(n));
  }
  bool constant = std::all_of(per.begin(), per.end(), [&](bool x) { return x == per[0]; });
  if (!constant) return periodic(std::move(pre), std::move(per));
  // collapse back to a finite/cofinite list
  std::vector<std::uint64_t> listed;
  for (std::size_t i = 0; i < pre_len; ++i) {
    if (pre[i] != per[0]) listed.push_back(i + 1);
  }
  return per[0] ? cofinite(std::move(listed)) : finite(std::move(listed));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

Rational part_frequency(const IndexSet& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("part_frequency needs n >= 1");
  std::uint64_t count = 0;
  switch (a.kind()) {
    case IndexSet::Kind::Finite:
      count = listed_upto(a.listed(), n);
      break;
    case IndexSet::Kind::Cofinite:
      count = n - listed_upto(a.listed(), n);
      break;
    case IndexSet::Kind::EventuallyPeriodic: {
      const auto& pre = a.preamble();
      const auto& per = a.period();
      std::uint64_t head = std::min<std::uint64_t>(n, pre.size());
      count = static_cast<std::uint64_t>(std::count(pre.begin(), pre.begin() + static_cast<long>(head), true));
      if (n > pre.size()) {
        std::uint64_t rest = n - pre.size();
        std::uint64_t cycles = rest / per.size();
        std::uint64_t tail = rest % per.size();
        auto ones = static_cast<std::uint64_t>(std::count(per.begin(), per.end(), true));
        count += cycles * ones;
        count += static_cast<std::uint64_t>(std::count(per.begin(), per.begin() + static_cast<long>(tail), true));
      }
      break;
    }
    case IndexSet::Kind::Opaque:
      for (std::uint64_t i = 1; i <= n; ++i) count += a.contains(i) ? 1 : 0;
      break;
  }
  return ratio(Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(n)));
}

Verdict filter_membership(const IndexSet& a, std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be >= 1");
  switch (a.kind()) {
    case IndexSet::Kind::Finite:
      return Verdict::no();
    case IndexSet::Kind::Cofinite:
      return Verdict::yes();
    case IndexSet::Kind::EventuallyPeriodic: {
      const auto& per = a.period();
      bool full = std::all_of(per.begin(), per.end(), [](bool x) { return x; });
      return full ? Verdict::yes() : Verdict::no();
    }
    case IndexSet::Kind::Opaque:
      break;
  }
  return Verdict::unknown(horizon, part_frequency(a, horizon));
}

}  // namespace problogic::qnum
