#pragma once

#include <gmpxx.h>

#include <string>

namespace qcong {

using Integer = mpz_class;
using Rational = mpq_class;

/// binomial(m, j) with binomial(m, j) = 0 whenever j < 0 or j > m. This one
/// convention is used everywhere, including m < 0.
Integer binomial(long m, long j);

/// binomial(N, i) for an arbitrary integer N (negative N uses the generalised
/// falling-factorial definition); used for (1 - eps)^N expansions.
Integer binomial_general(const Integer& N, unsigned long i);

Integer factorial(unsigned long m);

bool is_prime(unsigned long m);

unsigned long euler_phi(unsigned long n);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Rational parse_rational(const std::string& text);

/// num/den in canonical form. Throws DivisionByZero when den = 0.
Rational frac(const Integer& num, const Integer& den);

}  // namespace qcong
