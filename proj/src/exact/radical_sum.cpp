#include "exact/radical_sum.hpp"

#include <cmath>

namespace rterm::exact {

void RadicalSum::add_term(const Int &key, const Rational &coeff) {
  if (sgn(coeff) == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

RadicalSum RadicalSum::from_rational(const Rational &q) {
  RadicalSum s;
  s.add_term(1, q);
  return s;
}

RadicalSum RadicalSum::from_sqrt_rational(const SqrtRational &v) {
  RadicalSum s;
  if (v.is_zero()) return s;
  // sign*sqrt(n/d) = sign * sqrt(n*d)/d = sign * (a/d) * sqrt(m)
  const Int n = v.radicand().get_num();
  const Int d = v.radicand().get_den();
  const auto [a, m] = squarefree_decompose(n * d);
  Rational coeff = rational_of(a, d);
  if (v.sign() < 0) coeff = -coeff;
  s.add_term(m, coeff);
  return s;
}

RadicalSum &RadicalSum::operator+=(const RadicalSum &other) {
  for (const auto &[key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

RadicalSum operator*(const RadicalSum &a, const RadicalSum &b) {
  RadicalSum out;
  for (const auto &[d1, c1] : a.terms_) {
    for (const auto &[d2, c2] : b.terms_) {
      // sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd; both keys are
      // squarefree so the new key is squarefree as well.
      const Int g = gcd(d1, d2);
      out.add_term((d1 / g) * (d2 / g), c1 * c2 * g);
    }
  }
  return out;
}

RadicalSum RadicalSum::scaled_by(const Rational &q) const {
  RadicalSum out;
  if (sgn(q) == 0) return out;
  for (const auto &[key, coeff] : terms_) out.add_term(key, coeff * q);
  return out;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> RadicalSum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

double RadicalSum::value() const {
  double total = 0.0;
  for (const auto &[key, coeff] : terms_)
    total += to_double(coeff) * std::sqrt(key.get_d());
  return total;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto &[key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    if (key == 1) {
      out += exact::to_string(coeff);
    } else {
      out += exact::to_string(coeff) + "*sqrt(" + key.get_str() + ")";
    }
  }
  return out;
}

}  // namespace rterm::exact
