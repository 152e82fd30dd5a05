#include "exact/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace rterm::exact {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_perfect_square(const Rational &q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rational sqrt_exact(const Rational &q) {
  if (!is_perfect_square(q))
    throw std::invalid_argument("sqrt_exact: not a perfect square");
  Int num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
  return rational_of(num, den);
}

namespace {

const std::vector<unsigned long> &small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 8192;
    std::vector<bool> sieve(limit, true);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p < limit; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q < limit; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

bool is_probable_prime(const Int &n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard-Brent; n must be composite, odd and free of small primes.
Int pollard_brent(const Int &n) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, ys = y, q = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Int &v) { v = (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        const unsigned long chunk = std::min(m, r - k);
        for (unsigned long i = 0; i < chunk; ++i) {
          step(y);
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
        k += chunk;
      }
      r *= 2;
    }
    if (d == n) {
      do {
        step(ys);
        d = gcd(abs(x - ys), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int &n, std::map<Int, unsigned> &factors) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++factors[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Int, unsigned> sub;
    factor_into(root, sub);
    for (const auto &[p, e] : sub) factors[p] += 2 * e;
    return;
  }
  const Int d = pollard_brent(n);
  factor_into(d, factors);
  factor_into(n / d, factors);
}

}  // namespace

std::pair<Int, Int> squarefree_decompose(const Int &n) {
  if (n < 1)
    throw std::invalid_argument("squarefree_decompose: n must be >= 1");
  Int rest = n;
  std::map<Int, unsigned> factors;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    unsigned exp = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exp;
    }
    if (exp > 0) factors[Int(static_cast<long>(p))] += exp;
  }
  factor_into(rest, factors);
  Int square_root_part = 1, free_part = 1;
  for (const auto &[p, e] : factors) {
    for (unsigned i = 0; i + 1 < e; i += 2) square_root_part *= p;
    if (e % 2 != 0) free_part *= p;
  }
  return {square_root_part, free_part};
}

}  // namespace rterm::exact
