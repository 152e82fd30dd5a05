#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace rterm::exact {

// GMP provides the arbitrary-precision arithmetic; everything on top of it
// (symbols, radical sums) is ours. mpq_class is always kept canonical
// (lowest terms, positive denominator) by the gmpxx operators.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_of(const Int &num, const Int &den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical form: "8/5", "-4/5", "2", "0".
inline std::string to_string(const Rational &q) { return q.get_str(); }

std::optional<Rational> parse_rational(std::string_view text);

inline double to_double(const Rational &q) { return q.get_d(); }

inline int sign_of(const Rational &q) { return sgn(q); }

// Exact n!.
Int factorial(unsigned long n);

bool is_perfect_square(const Rational &q);

// Exact square root; precondition: is_perfect_square(q).
Rational sqrt_exact(const Rational &q);

// Writes n = a^2 * d with d squarefree; requires n >= 1.
// Small primes are stripped by trial division, any remaining cofactor is
// resolved by Pollard-Brent factorization, so the result is exact for
// arbitrary n.
std::pair<Int, Int> squarefree_decompose(const Int &n);

}  // namespace rterm::exact
