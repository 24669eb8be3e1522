#include "doctest.h"
#include "oracles.hpp"
#include "qcong/error.hpp"
#include "qcong/numeric.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/qcong.hpp"
#include "qcong/rootexpand.hpp"

using namespace qcong;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

CyclotomicNumber Z(unsigned long n, long e) { return CyclotomicNumber::zeta_power(n, e); }
CyclotomicNumber C(unsigned long n, const Rational& c) { return CyclotomicNumber(n, c); }

CyclotomicNumber random_element(oracle::Rng& rng, unsigned long n) {
  return CyclotomicNumber::from_poly(n, rng.poly(static_cast<long>(2 * n), 30, 4));
}

}  // namespace

TEST_SUITE("rootexpand") {

TEST_CASE("Q(zeta) examples") {
  CHECK(Z(4, 1) * Z(4, 1) == C(4, -1));
  CHECK(Z(4, 1).inverse() == -Z(4, 1));
  CHECK(Z(3, 1) + Z(3, 2) == C(3, -1));
  CHECK(Z(5, 5) == C(5, 1));
  CHECK(Z(6, -1) * Z(6, 1) == C(6, 1));
  CHECK(Z(7, 1).residue().size() == 6);
  CHECK_THROWS_AS(CyclotomicNumber(5).inverse(), ZeroInverse);
  CHECK(to_string(Z(3, 2)) == "-z - 1");
  CHECK(C(3, Rational(1, 2)).is_rational());
  CHECK_FALSE(Z(3, 1).is_rational());
}

TEST_CASE("property: field axioms and inverses in Q(zeta_n)") {
  oracle::Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<unsigned long>(rng.uniform(1, 15));
    const auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == C(n, 1));
    // Reduction agrees with naive long division by the Moebius Phi_n.
    const Poly prod = a.as_poly() * b.as_poly();
    const auto naive = oracle::divrem(prod.coeffs(), oracle::cyclotomic_mobius(n).coeffs()).r;
    auto got = (a * b).residue();
    oracle::trim(got);
    REQUIRE(got == naive);
  }
}

TEST_CASE("series expansion examples") {
  for (unsigned long n = 1; n <= 6; ++n) {
    const EpsSeries s = expand_poly_at_root(P({0, 1}), n, 2);
    CHECK(s[0] == Z(n, 1));
    CHECK(s[1] == -Z(n, 1));
    const EpsSeries t = expand_poly_at_root(Poly::monomial(1, n), n, 3);
    CHECK(t[0] == C(n, 1));
    CHECK(t[1] == C(n, -static_cast<long>(n)));
    CHECK(t[2] == C(n, Rational(binomial(static_cast<long>(n), 2))));
    CHECK(expand_poly_at_root(cyclotomic(n), n, 1).vanishes_through(1));
    CHECK_THROWS_AS(expand_ratfun_at_root(RationalFunction(P({1}), Poly::constant(1) -
                                                                       Poly::monomial(1, n)),
                                          n, 2),
                    DenominatorVanishes);
  }
  CHECK(expand_ratfun_at_root(RationalFunction(P({1}), P({1, -1})), 2, 1)[0] ==
        C(2, Rational(1, 2)));
  const EpsSeries h = expand_ratfun_at_root(harmonic_sum(5), 5, 2);
  CHECK(h[0] == C(5, -2));
  CHECK(h[1] == C(5, 5));
  CHECK(EpsSeries::one_minus_eps_pow(3, 4, Integer(-1)).coeffs() ==
        std::vector<CyclotomicNumber>(4, C(3, 1)));
}

TEST_CASE("property: expansion is a ring homomorphism") {
  oracle::Rng rng(32);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<unsigned long>(rng.uniform(1, 10));
    const auto m = static_cast<unsigned>(rng.uniform(1, 5));
    const Poly p = rng.poly(15, 50, 3), q = rng.poly(15, 50);
    const EpsSeries ep = expand_poly_at_root(p, n, m), eq = expand_poly_at_root(q, n, m);
    REQUIRE((ep * eq).coeffs() == expand_poly_at_root(p * q, n, m).coeffs());
    REQUIRE((ep + eq).coeffs() == expand_poly_at_root(p + q, n, m).coeffs());
    if (!ep[0].is_zero()) REQUIRE((ep * ep.inverse()).coeffs() ==
                                  EpsSeries::constant(n, m, 1).coeffs());
  }
}

TEST_CASE("lemma constants and S at zeta") {
  CHECK(lemma_constants(2, 1, 1).rho0 == 0);
  CHECK(lemma_constants(2, 1, 3).rho0 == Rational(7, 3));
  CHECK(lemma_constants(2, 1, 3).rho0_hat == 2);
  CHECK(s_at_zeta(1).is_zero());
  CHECK(s_at_zeta(2) == C(2, Rational(1, 8)));
  // n = 3 by direct field arithmetic.
  CyclotomicNumber s3(3);
  for (long k = 1; k <= 2; ++k) {
    const auto zk = Z(3, k);
    const auto d = C(3, 1) - zk;
    s3 += zk * (zk * Rational(k + 1) + C(3, k - 1)) * Rational(k) * (d * d * d).inverse();
  }
  CHECK(s_at_zeta(3) == s3 * Rational(1, 2));
  for (unsigned long n = 1; n <= 20; ++n)
    REQUIRE(s_at_zeta(n) == expand_ratfun_at_root(s_sum(n), n, 1)[0]);
}

TEST_CASE("lemmas 1, 3 and the harmonic expansion") {
  CHECK(verify_lemma1(2, 1, 3).holds);
  CHECK(verify_lemma1(3, 2, 2).holds);
  CHECK(verify_lemma3(2, 1, 3).holds);
  CHECK(verify_lemma3(4, 1, 2).holds);
  for (long a = 1; a <= 4; ++a)
    for (long n = 1; n <= 4; ++n) {
      CHECK(lemma1_series(a, 0, n).vanishes_through(4));
      CHECK(lemma3_series(a, a, n).vanishes_through(4));
    }
  CHECK(verify_lemma2_eq3(3).holds);
  CHECK(verify_lemma2_eq3(5).holds);
  CHECK(verify_lemma2_eq3(2).holds);
  CHECK(expand_ratfun_at_root(harmonic_sum(3), 3, 2)[1] == C(3, 1));
  const EpsSeries h5 = expand_ratfun_at_root(harmonic_sum(5), 5, 3);
  CHECK(h5[2] == s_at_zeta(5));
}

TEST_CASE("lemma 1 at n = 1 is a rational series") {
  for (long a = 1; a <= 5; ++a)
    for (long b = 0; b <= a; ++b) {
      const EpsSeries s = lemma1_series(a, b, 1);
      for (const auto& c : s.coeffs()) REQUIRE(c.is_rational());
      REQUIRE(verify_lemma1(a, b, 1).holds);
    }
}

TEST_CASE("lemma 1 under the twist zeta -> zeta^2 for small primes") {
  for (long n : {3, 5, 7})
    for (long a = 1; a <= 4; ++a)
      for (long b = 0; b <= a; ++b)
        REQUIRE(verify_lemma1(a, b, n, 2).holds == verify_lemma1(a, b, n).holds);
}

TEST_CASE("negative control: a wrong lemma prediction is detected") {
  auto pred = lemma1_prediction(2, 1, 3);
  pred[3] = pred[3] - s_at_zeta(3) * Rational(2 * 2 * 3);  // drop the S term
  CHECK_FALSE(compare_series("lemma1", lemma1_series(2, 1, 3), pred).holds);
  auto pred3 = lemma3_prediction(3, 1, 4);
  pred3[2] = pred3[2] + C(4, 1);
  CHECK_FALSE(compare_series("lemma3", lemma3_series(3, 1, 4), pred3).holds);
}

TEST_CASE("property: congruence holds iff the series vanishes through eps^{k-1}") {
  auto check = [](const CongruenceSides& s, const RationalFunction& rhs) {
    const unsigned long n = s.modulus.n();
    const auto k = static_cast<unsigned>(s.modulus.k());
    const bool holds = congruent(s.lhs, rhs, s.modulus).holds;
    const bool series = expand_ratfun_at_root(s.lhs - rhs, n, k).vanishes_through(k);
    REQUIRE(holds == series);
    return holds;
  };
  int false_cases = 0;
  for (long n = 2; n <= 6; ++n)
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= a; ++b) {
        for (auto s : {theorem1_sides(a, b, n), theorem2_sides(a, b, n),
                       known_congruence_sides(KnownCongruence::Straub2, a, b, n),
                       known_congruence_sides(KnownCongruence::Pan5, a, b, n),
                       known_congruence_sides(KnownCongruence::Andrews4, a, b, n)}) {
          CHECK(check(s, s.rhs()));
          if (!check(s, s.main)) ++false_cases;
        }
      }
  CHECK(false_cases > 0);
}

TEST_CASE("proof identities") {
  ProofIdentityParams p;
  p.a = 2;
  p.n = 2;
  p.q_samples = {Rational(2)};
  CHECK(verify_proof_identities(ProofIdentity::RootFilter, p).holds);
  p.a = 2;
  p.n = 3;
  CHECK(verify_proof_identities(ProofIdentity::Exceptional, p).holds);
  ProofIdentityParams s;
  s.n = 3;
  s.k = 1;
  CHECK(verify_proof_identities(ProofIdentity::Summations, s).holds);
  s.k = 3;
  CHECK_THROWS_AS(verify_proof_identities(ProofIdentity::Summations, s), InvalidResidueClass);
  s.k = 1;
  s.l = 4;
  CHECK_THROWS_AS(verify_proof_identities(ProofIdentity::Summations, s), InvalidResidueClass);
  s.l = 2;
  CHECK(verify_proof_identities(ProofIdentity::Summations, s).holds);
  for (long a = 1; a <= 4; ++a)
    for (long b = 0; b <= a; ++b)
      for (long n = 1; n <= 5; ++n) {
        ProofIdentityParams c;
        c.a = a;
        c.b = b;
        c.n = n;
        REQUIRE(verify_proof_identities(ProofIdentity::CongAsymp, c).holds);
      }
}

TEST_CASE("exceptional sums: parallel kernel, serial reference, closed forms") {
  for (long a = 1; a <= 3; ++a)
    for (long n = 2; n <= 4; ++n) {
      const auto ref = exceptional_sums_reference(a, n);
      const auto fast = exceptional_sums(a, n);
      const auto closed = exceptional_closed_forms(a, n);
      REQUIRE(fast.triple == ref.triple);
      REQUIRE(fast.pair == ref.pair);
      REQUIRE(fast.triple == closed.triple);
      REQUIRE(fast.pair == closed.pair);
    }
  // Negative control: the polynomial part of the closed form matters.
  const auto closed = exceptional_closed_forms(2, 3);
  CHECK_FALSE(exceptional_sums(2, 3).pair == closed.pair + C(3, 1));
}

}  // TEST_SUITE
