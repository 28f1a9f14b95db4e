#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "windinv/checked.hpp"

namespace windinv {

// Exact rational with checked 64-bit components, just enough for evaluating
// Laurent polynomials at nonzero rational points.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator) : num_(numerator) {}
  Rational(std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  // q^e for any integer e; q must be nonzero when e < 0.
  Rational pow(std::int64_t e) const {
    Rational base = e < 0 ? reciprocal() : *this;
    std::int64_t count = e < 0 ? -e : e;
    Rational result(1);
    for (std::int64_t k = 0; k < count; ++k) result = result * base;
    return result;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace windinv
