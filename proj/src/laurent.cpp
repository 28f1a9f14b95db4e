#include "windinv/laurent.hpp"

#include <cctype>

#include "windinv/errors.hpp"

namespace windinv {

void LaurentPoly::add_term(Exponents e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  out += b;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  out -= b;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = checked_neg(c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{checked_add(ea.i, eb.i), checked_add(ea.j, eb.j)};
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

Rational LaurentPoly::evaluate(const Rational& x0, const Rational& y0) const {
  if (x0.is_zero() || y0.is_zero()) {
    throw std::domain_error("LaurentPoly::evaluate: base must be nonzero");
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    sum = sum + Rational(c) * x0.pow(e.i) * y0.pow(e.j);
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    if (e.i != 0) {
      factors += "X";
      if (e.i != 1) factors += "^" + std::to_string(e.i);
    }
    if (e.j != 0) {
      if (!factors.empty()) factors += "*";
      factors += "Y";
      if (e.j != 1) factors += "^" + std::to_string(e.j);
    }
    if (factors.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += std::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly p;
    skip_ws();
    bool negative = consume_sign(false);
    while (true) {
      Term t = parse_term(negative);
      p.add_term(t.e, t.c);
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
      skip_ws();
    }
    return p;
  }

 private:
  struct Term {
    Exponents e;
    std::int64_t c = 1;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_sign(bool required) {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      bool negative = text_[pos_] == '-';
      ++pos_;
      return negative;
    }
    if (required) fail("expected a sign");
    return false;
  }

  Term parse_term(bool negative) {
    Term t;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.c = checked_mul(t.c, parse_number());
        any = true;
      } else if (c == 'X' || c == 'Y') {
        ++pos_;
        std::int64_t exp = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          exp = parse_signed_number();
        }
        if (c == 'X') t.e.i = checked_add(t.e.i, exp);
        else t.e.j = checked_add(t.e.j, exp);
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    if (negative) t.c = checked_neg(t.c);
    return t;
  }

  std::int64_t parse_number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::int64_t parse_signed_number() {
    bool negative = consume_sign(false);
    std::int64_t v = parse_number();
    return negative ? checked_neg(v) : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentParser parser(text);
  return parser.parse();
}

LaurentPoly unit_inverse(const LaurentPoly& u) {
  if (!u.is_unit()) throw std::domain_error("unit_inverse: not a unit");
  const auto& [e, c] = *u.terms().begin();
  return LaurentPoly::monomial(-e.i, -e.j, c);
}

LaurentPoly geometric_column(std::int64_t k) {
  LaurentPoly q;
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) q.add_term({i, 0}, 1);
  } else {
    for (std::int64_t i = k; i < 0; ++i) q.add_term({i, 0}, -1);
  }
  return q;
}

}  // namespace windinv
