#pragma once

#include <map>
#include <optional>
#include <string>

#include "exact/rational.hpp"
#include "exact/sqrt_rational.hpp"

namespace rterm::exact {

// Exact element of Q(sqrt(2), sqrt(3), ...): a finite sum of rational
// multiples of sqrt(d) over squarefree positive integers d. Closed under
// addition and multiplication, which is what makes the m-summation route
// an exact cross-check: its individual terms are irrational but cancel to
// a pure rational (the d = 1 key) at the end.
class RadicalSum {
 public:
  RadicalSum() = default;  // zero

  static RadicalSum from_rational(const Rational &q);
  static RadicalSum from_sqrt_rational(const SqrtRational &v);

  RadicalSum &operator+=(const RadicalSum &other);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum &b) {
    a += b;
    return a;
  }

  friend RadicalSum operator*(const RadicalSum &a, const RadicalSum &b);

  RadicalSum scaled_by(const Rational &q) const;

  bool is_zero() const { return terms_.empty(); }

  // True when the value lies in Q (at most the d = 1 key present).
  bool is_rational() const;

  std::optional<Rational> as_rational() const;

  double value() const;

  std::size_t term_count() const { return terms_.size(); }

  // "3/5 + 1/2*sqrt(6)" style, keys ascending; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Int &key, const Rational &coeff);

  std::map<Int, Rational> terms_;  // squarefree key d -> nonzero coefficient
};

}  // namespace rterm::exact
