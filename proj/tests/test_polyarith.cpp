#include "doctest.h"
#include "oracles.hpp"
#include "qcong/error.hpp"
#include "qcong/kernels.hpp"
#include "qcong/numeric.hpp"
#include "qcong/poly.hpp"
#include "qcong/ratfun.hpp"

using namespace qcong;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

RationalFunction q_over_one_minus_q(unsigned long k) {
  return RationalFunction(Poly::monomial(1, k), Poly::constant(1) - Poly::monomial(1, k));
}

}  // namespace

TEST_SUITE("polyarith") {

TEST_CASE("numeric helpers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial_general(Integer(-3), 2) == 6);
  CHECK(factorial(10) == 3628800);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (unsigned long n = 1; n <= 60; ++n) CHECK(euler_phi(n) == oracle::totient(n));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  for (long m = 0; m <= 20; ++m)
    for (long j = 0; j <= m; ++j) CHECK(binomial(m, j) == oracle::binomial_pascal(m, j));
}

TEST_CASE("poly basics and examples") {
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == kZeroPolyDegree);
  CHECK(P({1, 1}) + P({1, -1}) == P({2}));
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK(P({1, 1, 1}) * P({1, 1}) == P({1, 2, 2, 1}));
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(Poly({Rational(1, 2), 1}).is_integral() == false);
  CHECK(P({3, 0, 2}).is_integral());
  CHECK(to_string(P({1, -1, 1})) == "q^2 - q + 1");
  CHECK(to_string(Poly({Rational(1), Rational(0), Rational(3, 2)})) == "(3/2)q^2 + 1");
  CHECK(to_string(P({0, -2})) == "-2q");
  CHECK(to_string(Poly()) == "0");
  CHECK(P({1, 2, 3}).eval(Rational(2)) == 17);
}

TEST_CASE("divrem examples") {
  auto dr = divrem(P({-1, 0, 1}), P({-1, 1}));
  CHECK(dr.quot == P({1, 1}));
  CHECK(dr.rem.is_zero());
  dr = divrem(P({1, 0, 1}), P({1, 1}));
  CHECK(dr.quot == P({-1, 1}));
  CHECK(dr.rem == P({2}));
  CHECK_THROWS_AS(exact_div(P({1, 0, 1}), P({1, 1})), NotDivisible);
  CHECK_THROWS_AS(divrem(P({1}), Poly()), DivisionByZero);
}

TEST_CASE("subst_power examples") {
  CHECK(subst_power(P({1, 1}), 3) == P({1, 0, 0, 1}));
  CHECK(subst_power(P({4, 0, 7}), 1) == P({4, 0, 7}));
  CHECK(subst_power(P({1, 1}), 2) == P({1, 0, 1}));
  CHECK_THROWS_AS(subst_power(P({1, 1}), 0), InvalidArgument);
}

TEST_CASE("property: ring axioms on 1000 random triples") {
  oracle::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Poly p = rng.poly(20, 1000000, t % 3 == 0 ? 7 : 1);
    const Poly q = rng.poly(20, 1000000, t % 5 == 0 ? 5 : 1);
    const Poly r = rng.poly(20, 1000000);
    REQUIRE((p + q) * r == p * r + q * r);
    REQUIRE(p * q == q * p);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p - p == Poly());
    REQUIRE((p * q).coeffs() == oracle::mul(p.coeffs(), q.coeffs()));
  }
}

TEST_CASE("property: divrem round trip against long division") {
  oracle::Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const Poly p = rng.poly(25, 1000, t % 2 ? 3 : 1);
    Poly q = rng.poly(10, 1000, t % 4 ? 1 : 5);
    if (q.is_zero()) q = P({1, 1});
    const DivRem dr = divrem(p, q);
    REQUIRE(q * dr.quot + dr.rem == p);
    REQUIRE((dr.rem.is_zero() || dr.rem.degree() < q.degree()));
    const oracle::QR naive = oracle::divrem(p.coeffs(), q.coeffs());
    REQUIRE(dr.quot.coeffs() == naive.q);
    REQUIRE(dr.rem.coeffs() == naive.r);
  }
}

TEST_CASE("property: subst_power is a ring homomorphism") {
  oracle::Rng rng(13);
  for (int t = 0; t < 1000; ++t) {
    const Poly p = rng.poly(12, 100, 3);
    const Poly q = rng.poly(12, 100);
    const auto m = static_cast<unsigned long>(rng.uniform(1, 6));
    REQUIRE(subst_power(p * q, m) == subst_power(p, m) * subst_power(q, m));
    REQUIRE(subst_power(p + q, m) == subst_power(p, m) + subst_power(q, m));
  }
}

TEST_CASE("property: kernels agree bit for bit across the threshold") {
  oracle::Rng rng(14);
  for (int t = 0; t < 1000; ++t) {
    const long la = rng.uniform(1, 3 * static_cast<long>(kernels::kKaratsubaThreshold));
    const long lb = rng.uniform(1, 3 * static_cast<long>(kernels::kKaratsubaThreshold));
    kernels::IntVec a(static_cast<std::size_t>(la)), b(static_cast<std::size_t>(lb));
    const long h = t % 2 ? 1000000 : 1000000000;
    for (auto& x : a) x = rng.big(h);
    for (auto& x : b) x = rng.big(h);
    const auto ref = kernels::mul_schoolbook(a, b);
    REQUIRE(kernels::mul_schoolbook_omp(a, b) == ref);
    REQUIRE(kernels::mul_karatsuba(a, b, 2) == ref);
    REQUIRE(kernels::mul_karatsuba(a, b, kernels::kKaratsubaThreshold) == ref);
    REQUIRE(kernels::mul_dense(a, b) == ref);
  }
  // One large case that takes the task-parallel branch.
  kernels::IntVec a(700), b(650);
  for (auto& x : a) x = rng.big(1000);
  for (auto& x : b) x = rng.big(1000);
  CHECK(kernels::mul_karatsuba(a, b, kernels::kKaratsubaThreshold) ==
        kernels::mul_schoolbook(a, b));
}

TEST_CASE("property: modular gcd matches Euclid") {
  oracle::Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    const Poly g = rng.poly(6, 50);
    const Poly a = rng.poly(8, 50, t % 3 ? 1 : 4) * g;
    const Poly b = rng.poly(8, 50) * g;
    const Poly fast = gcd(a, b);
    REQUIRE(fast == oracle::gcd_euclid(a.coeffs(), b.coeffs()));
    REQUIRE(fast == gcd_primitive_euclid(a, b));
    if (!g.is_zero() && !a.is_zero() && !b.is_zero()) REQUIRE(divrem(fast, monic(g)).rem.is_zero());
  }
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(P({0, 2}), Poly()) == P({0, 1}));
}

TEST_CASE("rational function examples") {
  const RationalFunction h1 = q_over_one_minus_q(1);
  CHECK(h1 + RationalFunction() == h1);
  CHECK(h1.den() == P({-1, 1}));
  CHECK(h1.num() == P({0, -1}));
  const RationalFunction sum = h1 + q_over_one_minus_q(2);
  CHECK(sum == RationalFunction(P({0, 1, 2}), P({1, 0, -1})));
  CHECK(sum.den() == P({-1, 0, 1}));
  const RationalFunction inv = RationalFunction(P({1})) / RationalFunction(P({1, 1}));
  CHECK(inv.num() == P({1}));
  CHECK(inv.den() == P({1, 1}));
  CHECK_THROWS_AS(inv / RationalFunction(), DivisionByZero);
  CHECK(to_string(inv) == "(1) / (q + 1)");
  CHECK(RationalFunction(P({2, 2}), P({3, 3})) == RationalFunction::constant(Rational(2, 3)));
}

TEST_CASE("property: rational function normalization and field laws") {
  oracle::Rng rng(16);
  for (int t = 0; t < 1000; ++t) {
    Poly d1 = rng.poly(5, 20), d2 = rng.poly(5, 20);
    if (d1.is_zero()) d1 = P({1});
    if (d2.is_zero()) d2 = P({2, 1});
    const Poly common = rng.poly(3, 5);
    const Poly n1 = rng.poly(6, 20) * (common.is_zero() ? P({1}) : common);
    const RationalFunction a(n1, common.is_zero() ? d1 : d1 * common);
    const RationalFunction b(rng.poly(6, 20, 3), d2);
    REQUIRE(RationalFunction(a.num(), a.den()) == a);
    REQUIRE((a.is_zero() || a.den().leading() == 1));
    REQUIRE(gcd(a.num(), a.den()).degree() <= 0);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) - b == a);
    REQUIRE(a * b == b * a);
    if (!b.is_zero()) REQUIRE((a * b) / b == a);
    // Cross-multiplication oracle for the sum.
    const RationalFunction s = a + b;
    REQUIRE(s.num() * (a.den() * b.den()) == (a.num() * b.den() + b.num() * a.den()) * s.den());
  }
}

}  // TEST_SUITE
