#include "qcong/numeric.hpp"

#include <numeric>

#include "qcong/error.hpp"

namespace qcong {

Integer binomial(long m, long j) {
  if (j < 0 || j > m) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(j));
  return r;
}

Integer binomial_general(const Integer& N, unsigned long i) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), N.get_mpz_t(), i);
  return r;
}

Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

bool is_prime(unsigned long m) {
  if (m < 2) return false;
  for (unsigned long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ParseError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qcong
