#pragma once

#include <map>
#include <string>

#include "windinv/laurent.hpp"
#include "windinv/matrices.hpp"
#include "windinv/presentations.hpp"
#include "windinv/words.hpp"

namespace windinv {

// Finite formal Z-linear combination of freely reduced words; the value of
// a Fox derivative before abelianization.
class GroupRingElement {
 public:
  using TermMap = std::map<Word, std::int64_t, ShortlexLess>;

  GroupRingElement() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, std::int64_t c);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);

  // Left translation u * e (group ring multiplication by a single word).
  friend GroupRingElement left_mul(const Word& u, const GroupRingElement& e);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string str() const;

 private:
  TermMap terms_;
};

// The Fox derivative d(w)/d(g), defined by dg/dg = 1, dh/dg = 0 for the
// other generator, d(g^-1)/dg = -g^-1, and the product rule
// d(uv)/dg = du/dg + u * dv/dg. Computed in one left-to-right scan with an
// accumulated prefix word.
GroupRingElement fox_derivative(const Word& w, Gen g);

// Replaces every word key by X^k Y^l with (k, l) its exponent sums.
LaurentPoly abelianize(const GroupRingElement& e);

// 2 x m boundary matrix of a rank-2 presentation: rows indexed by the
// generators (x first), columns by the relators, entry (g, r_j) the
// abelianized Fox derivative d(r_j)/dg.
LaurentMatrix boundary_d2(const Presentation& p);

// Fox's fundamental identity, a self-test of the derivative engine:
// abelianize(dw/dx)*(X-1) + abelianize(dw/dy)*(Y-1) = X^k Y^l - 1.
bool fundamental_identity_check(const Word& w);

}  // namespace windinv
