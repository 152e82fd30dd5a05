#include "exact/sqrt_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rterm::exact {

SqrtRational SqrtRational::signed_sqrt(int sign, Rational radicand) {
  if (sgn(radicand) < 0)
    throw std::invalid_argument("SqrtRational: negative radicand");
  SqrtRational v;
  if (sign == 0 || sgn(radicand) == 0) return v;  // exact zero
  v.sign_ = sign < 0 ? -1 : +1;
  v.radicand_ = std::move(radicand);
  return v;
}

std::optional<Rational> SqrtRational::as_rational() const {
  if (sign_ == 0) return Rational(0);
  if (!is_perfect_square(radicand_)) return std::nullopt;
  Rational root = sqrt_exact(radicand_);
  return sign_ < 0 ? Rational(-root) : root;
}

double SqrtRational::value() const {
  return sign_ * std::sqrt(to_double(radicand_));
}

std::string SqrtRational::to_string() const {
  if (sign_ == 0) return "0";
  if (auto q = as_rational()) return exact::to_string(*q);
  std::string s = sign_ < 0 ? "-" : "";
  return s + "sqrt(" + exact::to_string(radicand_) + ")";
}

}  // namespace rterm::exact
