#pragma once

#include <optional>
#include <string>

#include "exact/rational.hpp"

namespace rterm::exact {

// Exact value of the form sign * sqrt(radicand) with a nonnegative rational
// radicand. Closed under multiplication and rational scaling; this is the
// value domain of every coupling symbol in the toolkit.
class SqrtRational {
 public:
  SqrtRational() = default;  // zero

  static SqrtRational zero() { return {}; }

  // +sqrt(r); r must be >= 0.
  static SqrtRational of_sqrt(Rational r) { return signed_sqrt(+1, std::move(r)); }

  static SqrtRational signed_sqrt(int sign, Rational radicand);

  // sign(q) * sqrt(q^2)
  static SqrtRational from_rational(const Rational &q) {
    return signed_sqrt(sign_of(q), q * q);
  }

  int sign() const { return sign_; }
  const Rational &radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  friend SqrtRational operator*(const SqrtRational &a, const SqrtRational &b) {
    return signed_sqrt(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
  }
  SqrtRational &operator*=(const SqrtRational &other) {
    return *this = *this * other;
  }

  SqrtRational scaled_by(const Rational &q) const {
    return signed_sqrt(sign_ * sign_of(q), radicand_ * q * q);
  }

  SqrtRational negated() const { return signed_sqrt(-sign_, radicand_); }

  Rational squared() const { return radicand_; }

  // The exact rational value when the radicand is a perfect square.
  std::optional<Rational> as_rational() const;

  double value() const;

  bool operator==(const SqrtRational &other) const = default;

  // "0", "8/5" for perfect squares, otherwise "sqrt(2/15)" / "-sqrt(2/15)".
  std::string to_string() const;

 private:
  int sign_ = 0;       // -1, 0, +1; zero iff radicand is zero
  Rational radicand_;  // >= 0, lowest terms
};

}  // namespace rterm::exact
