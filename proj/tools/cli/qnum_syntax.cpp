#include "qnum_syntax.hpp"

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

namespace problogic::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  while (true) {
    auto pos = s.find(sep);
    out.emplace_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::uint64_t to_index(const std::string& w) {
  if (w.empty() || w.size() > 18) throw DescriptorError("bad index '" + w + "'");
  for (char c : w) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DescriptorError("bad index '" + w + "'");
  }
  auto n = std::stoull(w);
  if (n == 0) throw DescriptorError("indices start at 1");
  return n;
}

std::vector<std::uint64_t> index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& w : split(text, ',')) out.push_back(to_index(w));
  return out;
}

std::vector<bool> bits(std::string_view text) {
  std::vector<bool> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw DescriptorError("bits must be 0 or 1");
    out.push_back(c == '1');
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Rational rational_word(const std::string& w) {
  try {
    return parse_rational(w);
  } catch (const std::invalid_argument&) {
    throw DescriptorError("bad number '" + w + "'");
  }
}

class SequenceParser {
 public:
  SequenceParser(std::string_view text, std::uint64_t horizon) : text_(text), horizon_(horizon) {}

  qnum::QNumber parse() {
    auto x = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DescriptorError("sequence column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  qnum::QNumber expr() {
    auto x = term();
    while (true) {
      if (eat('+')) {
        x = x + term();
      } else if (eat('-')) {
        x = x - term();
      } else {
        return x;
      }
    }
  }

  qnum::QNumber term() {
    auto x = unary();
    while (true) {
      if (eat('*')) {
        x = x * unary();
      } else if (eat('/')) {
        auto d = unary();
        try {
          x = x * qnum::reciprocal(d, horizon_);
        } catch (const qnum::QNumberError& e) {
          fail(e.what());
        }
      } else {
        return x;
      }
    }
  }

  qnum::QNumber unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '.' || c == ',') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  qnum::QNumber primary() {
    if (eat('(')) {
      auto x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of sequence");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return qnum::QNumber::standard(rational_word(std::string(text_.substr(start, pos_ - start))));
    }
    auto n = name();
    if (n == "const") return qnum::QNumber::standard(rational_word(word()));
    if (n == "recip-n") return qnum::QNumber::reciprocal_index();
    if (n == "lin") return qnum::QNumber::index();
    if (n == "isqrt") {
      static const auto root =
          qnum::QNumber::opaque([](std::uint64_t i) { return Rational(Integer(static_cast<unsigned long>(isqrt(i)))); });
      return root;
    }
    if (n == "periodic") {
      std::vector<Rational> values;
      for (const auto& w : split(word(), ',')) values.push_back(rational_word(w));
      return qnum::QNumber::periodic({}, std::move(values));
    }
    fail(n.empty() ? "expected a sequence" : "unknown sequence '" + n + "'");
  }

  std::string_view text_;
  std::uint64_t horizon_;
  std::size_t pos_ = 0;
};

}  // namespace

qnum::IndexSet parse_index_set(std::string_view text) {
  text = trim(text);
  auto space = text.find_first_of(" \t");
  std::string head(text.substr(0, space));
  std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));

  if (head == "all" && rest.empty()) return qnum::IndexSet::all();
  if (head == "empty" && rest.empty()) return qnum::IndexSet::none();
  if (head == "squares" && rest.empty()) {
    return qnum::IndexSet::opaque([](std::uint64_t n) {
      auto r = isqrt(n);
      return r * r == n;
    });
  }
  if (head == "finite") return qnum::IndexSet::finite(index_list(rest));
  if (head == "cofinite") return qnum::IndexSet::cofinite(index_list(rest));
  if (head == "multiples") return qnum::IndexSet::multiples(to_index(std::string(rest)));
  if (head == "periodic") {
    auto colon = rest.find(':');
    std::vector<bool> pre, period;
    if (colon == std::string_view::npos) {
      period = bits(rest);
    } else {
      pre = bits(rest.substr(0, colon));
      period = bits(rest.substr(colon + 1));
    }
    if (period.empty()) throw DescriptorError("periodic set needs a nonempty period");
    return qnum::IndexSet::periodic(std::move(pre), std::move(period));
  }
  throw DescriptorError("unknown index set '" + std::string(text) + "'");
}

qnum::QNumber parse_sequence(std::string_view text, std::uint64_t horizon) {
  return SequenceParser(text, horizon).parse();
}

}  // namespace problogic::cli
