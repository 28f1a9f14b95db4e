#include "windinv/foxcalc.hpp"

#include <stdexcept>

namespace windinv {

void GroupRingElement::add_term(const Word& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, checked_neg(c));
  return *this;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out = a;
  out += b;
  return out;
}

GroupRingElement left_mul(const Word& u, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [w, c] : e.terms_) out.add_term(multiply(u, w), c);
  return out;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += to_string(w);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, Gen g) {
  const auto gen = static_cast<std::uint8_t>(g);
  GroupRingElement deriv;
  Word prefix;
  for (const Letter& a : w) {
    if (a.gen > 1) {
      throw std::domain_error("fox_derivative: word uses a generator beyond x, y");
    }
    const Word step = Word::single(a);
    if (a.gen == gen && a.sign > 0) {
      deriv.add_term(prefix, 1);  // prefix * d(g)/dg = prefix
    }
    prefix = multiply(prefix, step);
    if (a.gen == gen && a.sign < 0) {
      deriv.add_term(prefix, -1);  // prefix_old * (-g^-1) = -prefix_new
    }
  }
  return deriv;
}

LaurentPoly abelianize(const GroupRingElement& e) {
  LaurentPoly p;
  for (const auto& [w, c] : e.terms()) {
    const ExponentSums sums = exponent_sums(w);
    p.add_term({sums.x, sums.y}, c);
  }
  return p;
}

LaurentMatrix boundary_d2(const Presentation& p) {
  if (p.generator_count != 2) {
    throw std::domain_error("boundary_d2: presentation must have rank 2");
  }
  const int m = static_cast<int>(p.relators.size());
  LaurentMatrix d2(2, m);
  for (int col = 1; col <= m; ++col) {
    d2.at(1, col) = abelianize(fox_derivative(p.relators[col - 1], Gen::x));
    d2.at(2, col) = abelianize(fox_derivative(p.relators[col - 1], Gen::y));
  }
  return d2;
}

bool fundamental_identity_check(const Word& w) {
  const LaurentPoly dx = abelianize(fox_derivative(w, Gen::x));
  const LaurentPoly dy = abelianize(fox_derivative(w, Gen::y));
  const LaurentPoly x_minus_1 = LaurentPoly::monomial(1, 0, 1) - LaurentPoly(1);
  const LaurentPoly y_minus_1 = LaurentPoly::monomial(0, 1, 1) - LaurentPoly(1);
  const ExponentSums sums = exponent_sums(w);
  const LaurentPoly rhs =
      LaurentPoly::monomial(sums.x, sums.y, 1) - LaurentPoly(1);
  return dx * x_minus_1 + dy * y_minus_1 == rhs;
}

}  // namespace windinv
