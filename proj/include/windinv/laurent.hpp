#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "windinv/checked.hpp"
#include "windinv/rational.hpp"

namespace windinv {

// Exponent pair of a monomial X^i Y^j. The same pair indexes a winding-grid
// cell (i, j), whose center is (i + 1/2, j + 1/2).
struct Exponents {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Canonical term order: (j, i) ascending, a row-by-row reading of the grid.
struct ExponentOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

// Element of Z[X, X^-1, Y, Y^-1] in canonical sparse form: a map from
// exponent pairs to nonzero 64-bit coefficients, checked arithmetic.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, std::int64_t, ExponentOrder>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) {  // NOLINT: implicit by design, c acts as c*X^0*Y^0
    if (constant != 0) terms_[{0, 0}] = constant;
  }

  static LaurentPoly monomial(std::int64_t i, std::int64_t j, std::int64_t c) {
    LaurentPoly p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return *this == LaurentPoly(1); }

  // The units of the ring are exactly +-X^i Y^j.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    auto c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  // Adds c * X^i Y^j, keeping the form canonical (no zero coefficients).
  void add_term(Exponents e, std::int64_t c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exact evaluation at nonzero rationals.
  Rational evaluate(const Rational& x0, const Rational& y0) const;

  // Terms joined by +/- in canonical order, e.g. "2*Y^-1 - 2*X*Y^-1 + 1";
  // the zero polynomial prints as "0".
  std::string str() const;

  // Accepts any sum of c*X^i*Y^j style terms (factors in any order).
  static LaurentPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

// Inverse of a unit +-X^i Y^j; throws std::domain_error otherwise.
LaurentPoly unit_inverse(const LaurentPoly& u);

// q_k with (X - 1) * q_k = X^k - 1: the sum X^0 + ... + X^(k-1) for k >= 0,
// minus X^k - ... - X^-1 for k < 0. One vertical lattice step at horizontal
// position k contributes q_k * Y^j to the winding invariant.
LaurentPoly geometric_column(std::int64_t k);

}  // namespace windinv
