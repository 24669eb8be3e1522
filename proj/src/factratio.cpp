#include "qcong/factratio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "qcong/cyclo.hpp"
#include "qcong/error.hpp"
#include "qcong/numeric.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/qcong.hpp"

namespace qcong {

namespace {

std::vector<long> parse_list(std::string_view text, std::string_view whole) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty entry in factorial-ratio spec '" + std::string(whole) + "'");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cur.size()) throw ParseError("bad entry '" + cur + "' in spec '" + std::string(whole) + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') flush();
    else cur.push_back(c);
  }
  flush();
  return out;
}

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

Poly q_pow_minus_one(unsigned long m) { return Poly::monomial(1, m) - Poly::constant(1); }

int sigma_pow(unsigned long n, const Integer& e) {
  return (sign_sigma(n) == -1 && mpz_odd_p(e.get_mpz_t())) ? -1 : 1;
}

/// sigma^{c2} q^{c2 binom(n,2)} D_1(q^n).
RationalFunction weighted_base(const RationalFunction& d1, const Integer& c2, long n) {
  const auto un = static_cast<unsigned long>(n);
  const Integer e = c2 * (n * (n - 1) / 2);
  RationalFunction monomial;
  if (e >= 0)
    monomial = Poly::monomial(sigma_pow(un, c2), e.get_ui());
  else
    monomial = RationalFunction(Poly::constant(sigma_pow(un, c2)),
                                Poly::monomial(1, Integer(-e).get_ui()));
  return monomial * subst_power(d1, un);
}

Integer floor_sum(const std::vector<long>& v, const Rational& x) {
  Integer total = 0, f;
  for (long c : v) {
    const Rational y = x * c;
    mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    total += f;
  }
  return total;
}

// Under balance both floor sums grow by the same amount per unit step in x,
// so breakpoints t/d in (0, 1] suffice.
std::optional<Rational> scan_breakpoints(const std::vector<long>& a, const std::vector<long>& b) {
  std::set<Rational> points;
  for (const auto* list : {&a, &b})
    for (long d : *list)
      for (long t = 1; t <= d; ++t) points.insert(frac(t, d));
  for (const Rational& x : points)
    if (floor_sum(a, x) < floor_sum(b, x)) return x;
  return std::nullopt;
}

}  // namespace

FactorialRatioSpec::FactorialRatioSpec(std::vector<long> num, std::vector<long> den)
    : a_(std::move(num)), b_(std::move(den)) {
  if (a_.empty() || b_.empty())
    throw InvalidArgument("factorial-ratio spec needs non-empty parameter lists");
  for (const auto* list : {&a_, &b_})
    for (long v : *list)
      if (v < 1) throw InvalidArgument("factorial-ratio parameters must be positive");
  witness_ = scan_breakpoints(a_, b_);
}

FactorialRatioSpec FactorialRatioSpec::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
    throw ParseError("factorial-ratio spec must look like 'a1,a2/b1,b2': '" + std::string(text) + "'");
  auto a = parse_list(text.substr(0, slash), text);
  auto b = parse_list(text.substr(slash + 1), text);
  for (const auto* list : {&a, &b})
    for (long v : *list)
      if (v < 1) throw ParseError("factorial-ratio parameters must be positive: '" + std::string(text) + "'");
  return FactorialRatioSpec(std::move(a), std::move(b));
}

bool FactorialRatioSpec::balanced() const { return sum(a_) == sum(b_); }

bool FactorialRatioSpec::landau_integral() const { return balanced() && !witness_; }

std::optional<Rational> FactorialRatioSpec::witness() const { return witness_; }

FactorialRatioSpec FactorialRatioSpec::reciprocal() const { return {b_, a_}; }

FactorialRatioSpec FactorialRatioSpec::concat(const FactorialRatioSpec& other) const {
  std::vector<long> a = a_, b = b_;
  a.insert(a.end(), other.a_.begin(), other.a_.end());
  b.insert(b.end(), other.b_.begin(), other.b_.end());
  return {std::move(a), std::move(b)};
}

std::string to_string(const FactorialRatioSpec& spec) {
  std::string s;
  auto put = [&s](const std::vector<long>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
  };
  put(spec.num_params());
  s += '/';
  put(spec.den_params());
  return s;
}

SpecValidation validate_spec(const FactorialRatioSpec& spec) {
  SpecValidation v;
  v.balanced = spec.balanced();
  v.witness = spec.witness();
  v.integral = v.balanced && !v.witness;
  return v;
}

Integer floor_excess(const FactorialRatioSpec& spec, const Rational& x) {
  return floor_sum(spec.num_params(), x) - floor_sum(spec.den_params(), x);
}

RationalFunction factorial_ratio(const FactorialRatioSpec& spec, unsigned long n) {
  if (!spec.balanced()) throw NotBalanced("factorial ratio " + to_string(spec) + " is not balanced");
  if (n == 0) throw InvalidArgument("factorial_ratio: n must be >= 1");
  // [m]! = prod_{d >= 2} Phi_d^{floor(m/d)}, so D_n is a product of cyclotomic
  // powers with exponents e_d; numerator and denominator are coprime.
  long top = 0;
  for (long ai : spec.num_params()) top = std::max(top, ai * static_cast<long>(n));
  for (long bj : spec.den_params()) top = std::max(top, bj * static_cast<long>(n));
  std::vector<Poly> num, den;
  for (long d = 2; d <= top; ++d) {
    long e = 0;
    for (long ai : spec.num_params()) e += ai * static_cast<long>(n) / d;
    for (long bj : spec.den_params()) e -= bj * static_cast<long>(n) / d;
    if (e == 0) continue;
    const Poly& phi = cyclotomic(static_cast<unsigned long>(d));
    auto& side = e > 0 ? num : den;
    for (long i = 0; i < std::abs(e); ++i) side.push_back(phi);
  }
  RationalFunction r(product(num), product(den));
  if (spec.landau_integral() && !(r.is_polynomial() && r.num().is_integral()))
    throw NotIntegral("D_n of an integral spec is not an integer polynomial");
  return r;
}

Rational ratio_at_one(const FactorialRatioSpec& spec, unsigned long n) {
  Integer num = 1, den = 1;
  for (long ai : spec.num_params()) num *= factorial(static_cast<unsigned long>(ai) * n);
  for (long bj : spec.den_params()) den *= factorial(static_cast<unsigned long>(bj) * n);
  Rational r = frac(num, den);
  r.canonicalize();
  return r;
}

Integer c_coeff(const FactorialRatioSpec& spec, int i) {
  if (i != 2 && i != 3) throw InvalidArgument("c_coeff: i must be 2 or 3");
  Integer c = 0;
  for (long ai : spec.num_params()) c += binomial(ai, i);
  for (long bj : spec.den_params()) c -= binomial(bj, i);
  return c;
}

std::string_view variant_name(Theorem3Variant v) {
  return v == Theorem3Variant::StraubG ? "straub_g" : "pan_g";
}

CongruenceSides theorem3_sides(const FactorialRatioSpec& spec, long n, Theorem3Variant v) {
  if (!spec.balanced()) throw NotBalanced("factorial ratio " + to_string(spec) + " is not balanced");
  if (n < 1) throw InvalidArgument("theorem3: need n >= 1");
  const auto un = static_cast<unsigned long>(n);
  const RationalFunction lhs = factorial_ratio(spec, un);
  const RationalFunction d1 = factorial_ratio(spec, 1);
  const Rational d1_at_one = ratio_at_one(spec, 1);
  const Integer c2 = c_coeff(spec, 2);
  const Poly u = q_pow_minus_one(un);
  const Rational n2m1(n * n - 1);

  if (v == Theorem3Variant::StraubG) {
    const RationalFunction main = subst_power(d1, un * un);
    const Poly corr = u * u * Rational(-d1_at_one * Rational(c2) * n2m1 / 24);
    return {lhs, main, corr, CycloModulus(un, 3)};
  }
  const Integer c3 = c_coeff(spec, 3);
  const RationalFunction main = weighted_base(d1, c2, n);
  const Poly corr = u * u * Rational(d1_at_one * Rational(c2 + c3) * n2m1 / 12);
  return {lhs, main, corr, CycloModulus(un, 3)};
}

CongruenceReport verify_theorem3(const FactorialRatioSpec& spec, long n, Theorem3Variant v) {
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report = verify_sides(theorem3_sides(spec, n, v), "theorem3");
    report.spec = to_string(spec);
    report.detail = std::string(variant_name(v));
    report.set("n", n).set("k", 3);
  }
  return report;
}

CongruenceSides theorem3_phi4_sides(const FactorialRatioSpec& spec, long n,
                                    Theorem3Variant v) {
  if (!spec.balanced()) throw NotBalanced("factorial ratio " + to_string(spec) + " is not balanced");
  if (n < 2) throw InvalidArgument("theorem3-phi4: need n >= 2");
  const auto un = static_cast<unsigned long>(n);
  const RationalFunction lhs = factorial_ratio(spec, un);
  const RationalFunction d1 = factorial_ratio(spec, 1);
  const Rational d1_at_one = ratio_at_one(spec, 1);
  const Rational c2(c_coeff(spec, 2));
  // m plays the role of a * c2, which is what 2 (c2 + c3) reduces to for binomials.
  const Rational m(2 * (c_coeff(spec, 2) + c_coeff(spec, 3)));
  const Poly u = q_pow_minus_one(un);
  const Rational n2m1(n * n - 1);
  const RationalFunction h = harmonic_sum(un);

  if (v == Theorem3Variant::StraubG) {
    const Poly bracket_poly = Poly::constant(m * (n - 1) / 2) + u * Rational((m + c2) * n2m1 / 24) +
                              u * u * Rational((c2 * c2 * n - m - 2 * c2) * n2m1 / 48);
    const RationalFunction bracket =
        h * RationalFunction::constant(m) + RationalFunction(bracket_poly);
    const RationalFunction corr = RationalFunction(u * Rational(-d1_at_one)) * bracket;
    return {lhs, subst_power(d1, un * un), corr, CycloModulus(un, 4)};
  }
  const Poly bracket_poly =
      Poly::constant(frac(n - 1, 2)) - u * u * Rational((c2 * n - 1) * n2m1 / 48);
  const RationalFunction bracket = h + RationalFunction(bracket_poly);
  const RationalFunction corr = RationalFunction(u * Rational(-d1_at_one * m)) * bracket;
  return {lhs, weighted_base(d1, c_coeff(spec, 2), n), corr, CycloModulus(un, 4)};
}

CongruenceReport explore_theorem3_phi4(const FactorialRatioSpec& spec, long n,
                                       Theorem3Variant v) {
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report = verify_sides(theorem3_phi4_sides(spec, n, v), "theorem3-phi4");
    report.spec = to_string(spec);
    report.detail = std::string(variant_name(v)) + " (exploratory candidate)";
    report.set("n", n).set("k", 4);
  }
  return report;
}

CongruenceReport verify_classical_ratio(const FactorialRatioSpec& spec, long p) {
  if (!spec.balanced()) throw NotBalanced("factorial ratio " + to_string(spec) + " is not balanced");
  if (!spec.landau_integral())
    throw NotIntegral("factorial ratio " + to_string(spec) + " is not integral");
  if (p < 2 || !is_prime(static_cast<unsigned long>(p)))
    throw NotPrime(std::to_string(p) + " is not prime");
  if (p <= 3) throw PrimeTooSmall("classical congruence needs p > 3");
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report.family = "classical_ratio";
    report.spec = to_string(spec);
    report.set("n", p).set("k", 3);
    const Rational diff = ratio_at_one(spec, static_cast<unsigned long>(p)) - ratio_at_one(spec, 1);
    Integer p3 = Integer(p) * p * p;
    Integer rem;
    mpz_fdiv_r(rem.get_mpz_t(), diff.get_num_mpz_t(), p3.get_mpz_t());
    report.detail = "difference " + to_string(diff);
    report.remainder = Poly::constant(Rational(rem));
    report.finalize();
  }
  return report;
}

}  // namespace qcong
