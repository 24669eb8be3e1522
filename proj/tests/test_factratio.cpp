#include "doctest.h"
#include "oracles.hpp"
#include "qcong/error.hpp"
#include "qcong/factratio.hpp"
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

FactorialRatioSpec S(const char* text) { return FactorialRatioSpec::parse(text); }

// D_n as (product of numerator q-factorials, product of denominator ones).
std::pair<oracle::Vec, oracle::Vec> naive_ratio(const FactorialRatioSpec& s, long n) {
  oracle::Vec num{Rational(1)}, den{Rational(1)};
  for (long a : s.num_params()) num = oracle::mul(num, oracle::q_factorial_naive(a * n).coeffs());
  for (long b : s.den_params()) den = oracle::mul(den, oracle::q_factorial_naive(b * n).coeffs());
  return {num, den};
}

const std::vector<const char*> kSpecs{"2/1,1", "3/1,2", "4/1,3", "4/2,2", "5/2,3",
                                      "4,1/2,2,1", "1,1/2", "1,2/3", "2,2,1/4,1",
                                      "6,1/3,2,2", "10,1/5,4,2"};

}  // namespace

TEST_SUITE("factratio") {

TEST_CASE("spec parsing and validation examples") {
  const auto s = S("30, 1/15,10,6");
  CHECK(s.num_params() == std::vector<long>{30, 1});
  CHECK(s.den_params() == std::vector<long>{15, 10, 6});
  CHECK(to_string(s) == "30,1/15,10,6");
  CHECK_THROWS_AS(S("1,2"), ParseError);
  CHECK_THROWS_AS(S("1,,2/3"), ParseError);
  CHECK_THROWS_AS(S("1,0/1"), ParseError);
  CHECK_THROWS_AS(S("1,x/1"), ParseError);
  CHECK_THROWS_AS(S("1/2/3"), ParseError);

  auto v = validate_spec(S("2/1,1"));
  CHECK(v.balanced);
  CHECK(v.integral);
  CHECK_FALSE(v.witness);
  v = validate_spec(S("1,1/2"));
  CHECK(v.balanced);
  CHECK_FALSE(v.integral);
  CHECK(v.witness == Rational(1, 2));
  v = validate_spec(S("30,1/15,10,6"));
  CHECK(v.balanced);
  CHECK(v.integral);
  CHECK_FALSE(validate_spec(S("3/1,1")).balanced);
  CHECK(S("4,1/2,2,1").landau_integral());
  CHECK_FALSE(S("2,2,1/4,1").landau_integral());
}

TEST_CASE("property: breakpoint scan agrees with random rational samples on (0, 3]") {
  oracle::Rng rng(41);
  for (const char* text : kSpecs) {
    const auto s = S(text);
    bool sampled_violation = false;
    for (int t = 0; t < 1000; ++t) {
      const Rational x = frac(rng.uniform(1, 3 * 360), 360);
      if (floor_excess(s, x) < 0) sampled_violation = true;
    }
    if (s.landau_integral()) REQUIRE_FALSE(sampled_violation);
    if (s.witness()) REQUIRE(floor_excess(s, *s.witness()) < 0);
  }
  CHECK(floor_excess(S("1,1/2"), Rational(1, 2)) == -1);
}

TEST_CASE("factorial_ratio examples and oracle") {
  CHECK(factorial_ratio(S("2/1,1"), 2) == RationalFunction(q_binomial(4, 2)));
  CHECK(factorial_ratio(S("2/1,1"), 2).num() == P({1, 1, 2, 1, 1}));
  CHECK(factorial_ratio(S("2/1,1"), 1) == RationalFunction(P({1, 1})));
  CHECK(factorial_ratio(S("1,1/2"), 1) == RationalFunction(P({1}), P({1, 1})));
  CHECK_THROWS_AS(factorial_ratio(S("3/1,1"), 2), NotBalanced);
  for (const char* text : kSpecs)
    for (long n = 1; n <= 4; ++n) {
      const auto s = S(text);
      const RationalFunction d = factorial_ratio(s, static_cast<unsigned long>(n));
      const auto [num, den] = naive_ratio(s, n);
      REQUIRE(d.num() * Poly(den) == d.den() * Poly(num));
      if (s.landau_integral()) {
        REQUIRE(d.is_polynomial());
        REQUIRE(d.num().is_integral());
      }
      REQUIRE(d.num().eval(Rational(1)) / d.den().eval(Rational(1)) ==
              ratio_at_one(s, static_cast<unsigned long>(n)));
    }
  const RationalFunction cheb = factorial_ratio(S("30,1/15,10,6"), 2);
  CHECK(cheb.is_polynomial());
  CHECK(cheb.num().is_integral());
  CHECK(cheb.num().degree() == 4 * 270);
}

TEST_CASE("c coefficients") {
  CHECK(c_coeff(S("2/1,1"), 2) == 1);
  CHECK(c_coeff(S("30,1/15,10,6"), 2) == 270);
  CHECK(c_coeff(S("30,1/15,10,6"), 3) == 3465);
  CHECK_THROWS_AS(c_coeff(S("2/1,1"), 4), InvalidArgument);
  for (const char* text : kSpecs) {
    const auto s = S(text);
    for (int i : {2, 3}) REQUIRE(c_coeff(s.reciprocal(), i) == -c_coeff(s, i));
  }
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b < a; ++b) {
      const FactorialRatioSpec s({a}, {b, a - b});
      REQUIRE(c_coeff(s, 2) == b * (a - b));
      REQUIRE(2 * (c_coeff(s, 2) + c_coeff(s, 3)) == a * b * (a - b));
    }
}

TEST_CASE("theorem 3 examples") {
  for (auto v : {Theorem3Variant::StraubG, Theorem3Variant::PanG}) {
    CHECK(verify_theorem3(S("4,1/2,2,1"), 3, v).holds);
    CHECK(verify_theorem3(S("2,2,1/4,1"), 3, v).holds);
    CHECK_THROWS_AS(verify_theorem3(S("3/1,1"), 3, v), NotBalanced);
  }
  for (const char* text : kSpecs) {
    const auto sides = theorem3_sides(S(text), 1, Theorem3Variant::StraubG);
    CHECK((sides.lhs - sides.rhs()).is_zero());
  }
  const auto r = verify_theorem3(S("4,1/2,2,1"), 3, Theorem3Variant::PanG);
  CHECK(r.family == "theorem3");
  CHECK(r.spec == "4,1/2,2,1");
  CHECK(r.param("n") == 3);
  CHECK(r.param("k") == 3);
}

TEST_CASE("negative control: deleting the theorem 3 correction is detected") {
  for (auto v : {Theorem3Variant::StraubG, Theorem3Variant::PanG})
    for (long n = 2; n <= 5; ++n) {
      const auto s = theorem3_sides(S("4,1/2,2,1"), n, v);
      REQUIRE_FALSE(congruent(s.lhs, s.main, s.modulus).holds);
    }
}

TEST_CASE("property: reduction to the binomial case") {
  for (long a = 2; a <= 5; ++a)
    for (long b = 1; b < a; ++b)
      for (long n = 2; n <= 8; ++n) {
        const FactorialRatioSpec s({a}, {b, a - b});
        const auto t_s = verify_theorem3(s, n, Theorem3Variant::StraubG);
        const auto k_s = verify_known_congruence(KnownCongruence::Straub2, a, b, n);
        REQUIRE(t_s.holds == k_s.holds);
        REQUIRE(t_s.remainder == k_s.remainder);
        const auto t_p = verify_theorem3(s, n, Theorem3Variant::PanG);
        const auto k_p = verify_known_congruence(KnownCongruence::Pan5, a, b, n);
        REQUIRE(t_p.holds == k_p.holds);
        REQUIRE(t_p.remainder == k_p.remainder);
      }
}

TEST_CASE("exploratory mod Phi^4 candidates reduce to theorem1 and theorem2") {
  for (long a = 2; a <= 5; ++a)
    for (long b = 1; b < a; ++b)
      for (long n = 2; n <= 6; ++n) {
        const FactorialRatioSpec s({a}, {b, a - b});
        const auto cs = theorem3_phi4_sides(s, n, Theorem3Variant::StraubG);
        const auto cp = theorem3_phi4_sides(s, n, Theorem3Variant::PanG);
        REQUIRE((cs.rhs() - theorem1_sides(a, b, n).rhs()).num().is_zero());
        REQUIRE((cp.rhs() - theorem2_sides(a, b, n).rhs()).num().is_zero());
      }
}

TEST_CASE("exploratory candidates: outcomes and negative controls") {
  for (const char* text : kSpecs)
    for (auto v : {Theorem3Variant::StraubG, Theorem3Variant::PanG})
      for (long n = 2; n <= 4; ++n) {
        const auto rep = explore_theorem3_phi4(S(text), n, v);
        CHECK(rep.family == "theorem3-phi4");
        CHECK(rep.detail.find("exploratory") != std::string::npos);
        CHECK(rep.param("k") == 4);
        auto sides = theorem3_phi4_sides(S(text), n, v);
        if (!rep.holds) continue;
        // A perturbation divisible by Phi_n^3 but not Phi_n^4 must be seen.
        const auto un = static_cast<unsigned long>(n);
        const Poly u = Poly::monomial(1, un) - Poly::constant(1);
        sides.correction += RationalFunction(u * u * u);
        REQUIRE_FALSE(congruent(sides.lhs, sides.rhs(), sides.modulus).holds);
        REQUIRE_FALSE(congruent(sides.lhs, sides.main, sides.modulus).holds);
      }
  CHECK_THROWS_AS(theorem3_phi4_sides(S("2/1"), 3, Theorem3Variant::StraubG), NotBalanced);
  CHECK_THROWS_AS(theorem3_phi4_sides(S("2/1,1"), 1, Theorem3Variant::PanG), InvalidArgument);
}

TEST_CASE("property: multiplicativity over concatenated specs") {
  const std::vector<const char*> base{"2/1,1", "3/1,2", "4,1/2,2,1", "1,1/2", "2,2,1/4,1"};
  for (const char* x : base)
    for (const char* y : base) {
      const auto s = S(x).concat(S(y));
      for (auto v : {Theorem3Variant::StraubG, Theorem3Variant::PanG})
        for (long n = 2; n <= 4; ++n) {
          REQUIRE(verify_theorem3(S(x), n, v).holds);
          REQUIRE(verify_theorem3(S(y), n, v).holds);
          REQUIRE(verify_theorem3(s, n, v).holds);
        }
    }
}

TEST_CASE("property: asymptotic form for binomial specs") {
  for (long a = 2; a <= 5; ++a)
    for (long b = 1; b < a; ++b)
      for (long n = 2; n <= 5; ++n) {
        const auto un = static_cast<unsigned long>(n);
        const Poly lhs = q_binomial(a * n, b * n);
        const Rational B1(binomial(a, b));
        const Rational scale = frac(n * n * (n * n - 1), 24);
        const Poly straub = subst_power(q_binomial(a, b), un * un);
        const Rational cs = -Rational(b * (a - b)) * scale;
        const int sign = (sign_sigma(un) == -1 && (b * (a - b)) % 2) ? -1 : 1;
        const Poly pan = subst_power(q_binomial(a, b), un)
                             .shifted(static_cast<std::size_t>(b * (a - b) * n * (n - 1) / 2)) *
                         Rational(sign);
        const Rational cp = Rational(a * b * (a - b)) * scale;
        const EpsSeries es = expand_poly_at_root(lhs - straub, un, 3);
        const EpsSeries ep = expand_poly_at_root(lhs - pan, un, 3);
        REQUIRE(es.vanishes_through(2));
        REQUIRE(ep.vanishes_through(2));
        REQUIRE(es[2] == CyclotomicNumber(un, cs * B1));
        REQUIRE(ep[2] == CyclotomicNumber(un, cp * B1));
      }
}

TEST_CASE("classical ratio congruences") {
  CHECK(verify_classical_ratio(S("2/1,1"), 5).holds);
  CHECK(verify_classical_ratio(S("2/1,1"), 5).detail == "difference 250");
  CHECK(verify_classical_ratio(S("30,1/15,10,6"), 5).holds);
  CHECK(verify_classical_ratio(S("4,1/2,2,1"), 7).holds);
  CHECK_THROWS_AS(verify_classical_ratio(S("1,1/2"), 5), NotIntegral);
  CHECK_THROWS_AS(verify_classical_ratio(S("2/1,1"), 9), NotPrime);
  CHECK_THROWS_AS(verify_classical_ratio(S("2/1,1"), 3), PrimeTooSmall);
  Rational cheb(factorial(30), factorial(15) * factorial(10) * factorial(6));
  cheb.canonicalize();
  CHECK(ratio_at_one(S("30,1/15,10,6"), 1) == cheb);
  CHECK(cheb == Rational(Integer("77636318760")));
}

}  // TEST_SUITE
