#include "qcong/qcong.hpp"

#include "qcong/error.hpp"
#include "qcong/qcalc.hpp"

namespace qcong {

namespace {

Poly q_pow_minus_one(unsigned long m) {
  return Poly::monomial(1, m) - Poly::constant(1);
}

// prod_{d < n} Phi_d(q), the lcm of 1 - q^k over 1 <= k < n.
Poly harmonic_denominator(unsigned long n) {
  std::vector<Poly> factors;
  for (unsigned long d = 1; d < n; ++d) factors.push_back(cyclotomic(d));
  return product(std::move(factors));
}

void check_range(long a, long b, long n, const VerifyOptions& opts, const char* who) {
  if (a < 0 || b < 0 || b > a)
    throw InvalidArgument(std::string(who) + ": need 0 <= b <= a");
  const long min_n = opts.allow_n1 ? 1 : 2;
  if (n < min_n)
    throw InvalidArgument(std::string(who) + ": need n >= " + std::to_string(min_n));
}

Rational r(long num, long den = 1) { return frac(num, den); }

Poly sign_monomial(int sign, std::size_t exponent) {
  return Poly::monomial(sign, exponent);
}

int sigma_pow(unsigned long n, long e) {
  return (sign_sigma(n) == -1 && (e % 2 != 0)) ? -1 : 1;
}

}  // namespace

RationalFunction harmonic_sum(unsigned long n) {
  if (n == 0) throw InvalidArgument("harmonic_sum: n must be >= 1");
  if (n == 1) return {};
  const Poly L = harmonic_denominator(n);
  Poly num;
  for (unsigned long k = 1; k < n; ++k) {
    // q^k / (1 - q^k) = -q^k (L / (q^k - 1)) / L
    num -= exact_div(L, q_pow_minus_one(k)).shifted(k);
  }
  return RationalFunction(std::move(num), L);
}

RationalFunction s_sum(unsigned long n) {
  if (n == 0) throw InvalidArgument("s_sum: n must be >= 1");
  if (n == 1) return {};
  const Poly L = harmonic_denominator(n);
  const Poly L3 = L * L * L;
  Poly num;
  for (unsigned long k = 1; k < n; ++k) {
    const Poly qk1 = q_pow_minus_one(k);
    Poly cof = exact_div(exact_div(exact_div(L3, qk1), qk1), qk1);
    // k q^k ((k+1) q^k + k - 1) / (1 - q^k)^3 = -k q^k (...) cof / L3
    const Poly inner = Poly::monomial(Rational(static_cast<long>(k + 1)), k) +
                       Poly::constant(Rational(static_cast<long>(k) - 1));
    num -= (inner * cof).shifted(k) * Rational(static_cast<long>(k));
  }
  return RationalFunction(num * frac(1, 2), L3);
}

std::string_view family_name(KnownCongruence f) {
  switch (f) {
    case KnownCongruence::Straub2: return "straub2";
    case KnownCongruence::Monomial3: return "monomial3";
    case KnownCongruence::Andrews4: return "andrews4";
    case KnownCongruence::Pan5: return "pan5";
  }
  return "?";
}

CongruenceSides known_congruence_sides(KnownCongruence f, long a, long b, long n,
                                       VerifyOptions opts) {
  check_range(a, b, n, opts, family_name(f).data());
  const auto un = static_cast<unsigned long>(n);
  const Poly lhs_binom = q_binomial(a * n, b * n);
  const Integer C = binomial(a, b);
  const long c2 = b * (a - b);
  const Poly u = q_pow_minus_one(un);
  const Rational n2m1(n * n - 1);

  switch (f) {
    case KnownCongruence::Straub2: {
      const Poly main = subst_power(q_binomial(a, b), un * un);
      const Poly corr = u * u * Rational(-Rational(C) * c2 * n2m1 / 24);
      return {lhs_binom, main, corr, CycloModulus(un, 3)};
    }
    case KnownCongruence::Monomial3: {
      const Poly lhs =
          lhs_binom.shifted(static_cast<std::size_t>(binomial(b * n, 2).get_ui())) *
          Rational(sigma_pow(un, b));
      const Poly main =
          Poly::constant(Rational(binomial(a - 1, b))) +
          sign_monomial(sigma_pow(un, a), binomial(a * n, 2).get_ui()) *
              Rational(binomial(a - 1, a - b));
      return {lhs, main, RationalFunction(), CycloModulus(un, 2)};
    }
    case KnownCongruence::Andrews4:
    case KnownCongruence::Pan5: {
      const Poly main =
          subst_power(q_binomial(a, b), un)
              .shifted(static_cast<std::size_t>(c2 * n * (n - 1) / 2)) *
          Rational(sigma_pow(un, c2));
      if (f == KnownCongruence::Andrews4)
        return {lhs_binom, main, RationalFunction(), CycloModulus(un, 2)};
      const Poly corr = u * u * Rational(Rational(C) * a * c2 * n2m1 / 24);
      return {lhs_binom, main, corr, CycloModulus(un, 3)};
    }
  }
  throw InvalidArgument("unknown congruence family");
}

CongruenceReport verify_sides(const CongruenceSides& sides, std::string_view family) {
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report = congruent(sides.lhs, sides.rhs(), sides.modulus);
  }
  report.family = std::string(family);
  report.params.clear();
  return report;
}

namespace {

CongruenceReport labelled(CongruenceReport rep, long a, long b, long n, long k) {
  rep.set("a", a).set("b", b).set("n", n).set("k", k);
  return rep;
}

}  // namespace

CongruenceReport verify_known_congruence(KnownCongruence f, long a, long b, long n,
                                         VerifyOptions opts) {
  const auto sides = known_congruence_sides(f, a, b, n, opts);
  return labelled(verify_sides(sides, family_name(f)), a, b, n,
                  static_cast<long>(sides.modulus.k()));
}

CongruenceSides theorem1_sides(long a, long b, long n, VerifyOptions opts) {
  check_range(a, b, n, opts, "theorem1");
  const auto un = static_cast<unsigned long>(n);
  const Poly u = q_pow_minus_one(un);
  const long c2 = b * (a - b);
  const Rational C(binomial(a, b));
  const Rational n2m1(n * n - 1);
  const Poly bracket_poly = Poly::constant(r(a * (n - 1), 2)) +
                            u * Rational(Rational(a + 1) * n2m1 / 24) +
                            u * u * Rational(Rational(c2 * n - a - 2) * n2m1 / 48);
  const RationalFunction bracket = harmonic_sum(un) * RationalFunction::constant(r(a)) +
                                   RationalFunction(bracket_poly);
  const RationalFunction corr =
      RationalFunction(u * Rational(-C * c2)) * bracket;
  return {q_binomial(a * n, b * n), subst_power(q_binomial(a, b), un * un), corr,
          CycloModulus(un, 4)};
}

CongruenceReport verify_theorem1(long a, long b, long n, VerifyOptions opts) {
  return labelled(verify_sides(theorem1_sides(a, b, n, opts), "theorem1"), a, b, n, 4);
}

CongruenceSides theorem2_sides(long a, long b, long n, VerifyOptions opts) {
  check_range(a, b, n, opts, "theorem2");
  const auto un = static_cast<unsigned long>(n);
  const Poly u = q_pow_minus_one(un);
  const long c2 = b * (a - b);
  const Rational C(binomial(a, b));
  const Rational n2m1(n * n - 1);
  const Poly main = subst_power(q_binomial(a, b), un)
                        .shifted(static_cast<std::size_t>(c2 * n * (n - 1) / 2)) *
                    Rational(sigma_pow(un, c2));
  const Poly bracket_poly = Poly::constant(r(n - 1, 2)) -
                            u * u * Rational(Rational(c2 * n - 1) * n2m1 / 48);
  const RationalFunction bracket = harmonic_sum(un) + RationalFunction(bracket_poly);
  const RationalFunction corr = RationalFunction(u * Rational(-C * a * c2)) * bracket;
  return {q_binomial(a * n, b * n), main, corr, CycloModulus(un, 4)};
}

CongruenceReport verify_theorem2(long a, long b, long n, VerifyOptions opts) {
  return labelled(verify_sides(theorem2_sides(a, b, n, opts), "theorem2"), a, b, n, 4);
}

CongruenceSides harmonic_sides(long n, int k) {
  if (n < 2) throw InvalidArgument("harmonic congruence: need n >= 2");
  if (k != 2 && k != 3) throw InvalidArgument("harmonic congruence: k must be 2 or 3");
  const auto un = static_cast<unsigned long>(n);
  const Poly u = q_pow_minus_one(un);
  const Rational n2m1(n * n - 1);
  const Poly main = Poly::constant(r(-(n - 1), 2));
  RationalFunction corr = u * Rational(-n2m1 / 24);
  if (k == 3) {
    corr += u * u * Rational(Rational(n - 1) * n2m1 / (48 * n));
    corr += RationalFunction(u * u * frac(1, n * n)) * s_sum(un);
  }
  return {harmonic_sum(un), main, corr, CycloModulus(un, static_cast<unsigned long>(k))};
}

CongruenceReport verify_harmonic_congruence(long n, int k) {
  CongruenceReport rep = verify_sides(harmonic_sides(n, k), "harmonic");
  rep.set("n", n).set("k", k);
  return rep;
}

Rational classical_difference(long a, long b, long p, int level) {
  const Integer big = binomial(a * p, b * p);
  const Integer small = binomial(a, b);
  Rational d(big - small);
  if (level == 4) {
    Rational h = 0;
    for (long k = 1; k < p; ++k) h += frac(1, k);
    d -= Rational(small * (a * b * (a - b) * p)) * h;
  } else if (level != 3) {
    throw InvalidArgument("classical congruence: level must be 3 or 4");
  }
  return d;
}

CongruenceReport verify_classical_integer(long a, long b, long p, int level) {
  if (a < 0 || b < 0 || b > a) throw InvalidArgument("classical: need 0 <= b <= a");
  if (p < 2 || !is_prime(static_cast<unsigned long>(p)))
    throw NotPrime(std::to_string(p) + " is not prime");
  if (p <= 3) throw PrimeTooSmall("classical congruence needs p > 3");
  CongruenceReport report;
  ReportTimer timer(report);
  report.family = "classical";
  report.set("a", a).set("b", b).set("n", p).set("k", level);
  const Rational d = classical_difference(a, b, p, level);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(level));
  report.detail = "difference " + to_string(d);
  if (mpz_divisible_ui_p(d.get_den_mpz_t(), static_cast<unsigned long>(p))) {
    report.remainder = Poly::constant(d);
  } else {
    Integer rem;
    mpz_fdiv_r(rem.get_mpz_t(), d.get_num_mpz_t(), pk.get_mpz_t());
    report.remainder = Poly::constant(Rational(rem));
  }
  report.finalize();
  return report;
}

}  // namespace qcong
