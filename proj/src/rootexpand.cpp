#include "qcong/rootexpand.hpp"

#include <utility>

#include "qcong/error.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/qcong.hpp"

namespace qcong {

EpsSeries::EpsSeries(unsigned long n, unsigned order)
    : n_(n), c_(order, CyclotomicNumber(n)) {
  if (order == 0) throw InvalidArgument("EpsSeries: order must be >= 1");
}

EpsSeries::EpsSeries(unsigned long n, std::vector<CyclotomicNumber> coeffs)
    : n_(n), c_(std::move(coeffs)) {
  if (c_.empty()) throw InvalidArgument("EpsSeries: order must be >= 1");
  for (const auto& c : c_)
    if (c.order() != n) throw InvalidArgument("EpsSeries: mixed fields");
}

EpsSeries EpsSeries::constant(unsigned long n, unsigned order, const Rational& c) {
  EpsSeries s(n, order);
  s.c_[0] = CyclotomicNumber(n, c);
  return s;
}

EpsSeries EpsSeries::one_minus_eps_pow(unsigned long n, unsigned order,
                                       const Integer& N) {
  EpsSeries s(n, order);
  for (unsigned i = 0; i < order; ++i) {
    Integer c = binomial_general(N, i);
    if (i % 2 == 1) c = -c;
    s.c_[i] = CyclotomicNumber(n, Rational(c));
  }
  return s;
}

bool EpsSeries::vanishes_through(unsigned k) const {
  for (unsigned i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

void EpsSeries::check_same(const EpsSeries& o) const {
  if (n_ != o.n_ || c_.size() != o.c_.size())
    throw InvalidArgument("EpsSeries: field or order mismatch");
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

EpsSeries& EpsSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  a.check_same(b);
  EpsSeries r(a.n_, a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

EpsSeries EpsSeries::inverse() const {
  if (c_[0].is_zero())
    throw DenominatorVanishes("series inverse: constant term is zero");
  const CyclotomicNumber inv0 = c_[0].inverse();
  EpsSeries r(n_, order());
  r.c_[0] = inv0;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    CyclotomicNumber acc(n_);
    for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -(acc * inv0);
  }
  return r;
}

EpsSeries expand_poly_at_root(const Poly& p, unsigned long n, unsigned order,
                              unsigned long root_power) {
  if (order == 0) throw InvalidArgument("expansion order must be >= 1");
  // coefficient of eps^i: (-1)^i sum_j p_j binom(j, i) w^j, bucketed by
  // the exponent of zeta.
  std::vector<std::vector<Rational>> acc(order, std::vector<Rational>(n));
  Integer bin;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational& c = p.coeffs()[j];
    if (sgn(c) == 0) continue;
    const std::size_t r = static_cast<std::size_t>((j % n) * (root_power % n) % n);
    for (unsigned i = 0; i < order && i <= j; ++i) {
      mpz_bin_uiui(bin.get_mpz_t(), j, i);
      acc[i][r] += c * bin;
    }
  }
  std::vector<CyclotomicNumber> coeffs;
  coeffs.reserve(order);
  for (unsigned i = 0; i < order; ++i) {
    CyclotomicNumber v = CyclotomicNumber::from_poly(n, Poly(std::move(acc[i])));
    if (i % 2 == 1) v = -v;
    coeffs.push_back(std::move(v));
  }
  return EpsSeries(n, std::move(coeffs));
}

EpsSeries expand_ratfun_at_root(const RationalFunction& r, unsigned long n,
                                unsigned order, unsigned long root_power) {
  const EpsSeries num = expand_poly_at_root(r.num(), n, order, root_power);
  if (r.is_polynomial()) return num;
  const EpsSeries den = expand_poly_at_root(r.den(), n, order, root_power);
  if (den[0].is_zero())
    throw DenominatorVanishes("denominator vanishes at the root of unity (Phi_" +
                              std::to_string(n) + " divides it)");
  return num * den.inverse();
}

LemmaConstants lemma_constants(long a, long b, long n) {
  const Integer A(a), B(b), N(n);
  const Integer an = A * N;
  const Integer am1 = an - 1;
  const Integer n2 = N * N;
  LemmaConstants k;
  k.rho0 = frac(3 * am1 * am1 - an * N - 1, 24);
  k.rho1 = frac(A * B * n2 * am1 * (an - N - 2) + (an + 2) * am1 * am1 * (an - 3) +
                        an * N + A + 2,
                    48);
  k.rho0_hat = frac(3 * am1 * am1 - (A + 1) * n2, 24);
  k.rho1_hat = frac(B * N * am1 * (am1 * am1 - (A + 1) * n2), 48) +
               frac(an * am1 * am1 * am1 - 6 * am1 * am1 + 2 * (A + 1) * n2, 48);
  k.rho0.canonicalize();
  k.rho1.canonicalize();
  k.rho0_hat.canonicalize();
  k.rho1_hat.canonicalize();
  return k;
}

CyclotomicNumber s_at_zeta(unsigned long n, unsigned long root_power) {
  CyclotomicNumber sum(n);
  const CyclotomicNumber one(n, 1);
  for (unsigned long k = 1; k < n; ++k) {
    const CyclotomicNumber wk =
        CyclotomicNumber::zeta_power(n, static_cast<long>(k * root_power));
    const CyclotomicNumber d = one - wk;
    const CyclotomicNumber inner =
        wk * Rational(static_cast<long>(k + 1)) + CyclotomicNumber(n, Rational(static_cast<long>(k) - 1));
    sum += (wk * inner * Rational(static_cast<long>(k))) * (d * d * d).inverse();
  }
  return sum * frac(1, 2);
}

namespace {

int sigma_pow(long n, long e) { return (n % 2 == 0 && e % 2 != 0) ? -1 : 1; }

std::size_t ix(const Integer& v) { return static_cast<std::size_t>(v.get_ui()); }

// -C(a-1,b) - C(a-1,a-b) sigma_n^a q^C(an,2)
Poly two_monomials(long a, long b, long n) {
  return Poly::constant(Rational(-binomial(a - 1, b))) +
         Poly::monomial(Rational(-binomial(a - 1, a - b) * sigma_pow(n, a)),
                        ix(binomial(a * n, 2)));
}

void check_ab(long a, long b, long n, long min_n, const char* who) {
  if (a < 0 || b < 0 || b > a) throw InvalidArgument(std::string(who) + ": need 0 <= b <= a");
  if (n < min_n)
    throw InvalidArgument(std::string(who) + ": need n >= " + std::to_string(min_n));
}

CyclotomicNumber rat(long n, const Rational& c) {
  return CyclotomicNumber(static_cast<unsigned long>(n), c);
}

}  // namespace

EpsSeries lemma1_series(long a, long b, long n, unsigned order,
                        unsigned long root_power) {
  check_ab(a, b, n, 1, "lemma1");
  const Poly weighted = q_binomial(a * n, b * n).shifted(ix(binomial(b * n, 2))) *
                        Rational(sigma_pow(n, b));
  return expand_poly_at_root(weighted + two_monomials(a, b, n),
                             static_cast<unsigned long>(n), order, root_power);
}

std::vector<CyclotomicNumber> lemma1_prediction(long a, long b, long n,
                                                unsigned long root_power) {
  check_ab(a, b, n, 1, "lemma1");
  const LemmaConstants k = lemma_constants(a, b, n);
  const Rational C(binomial(a, b) * (b * (a - b)));
  const Rational n2(n * n);
  const auto un = static_cast<unsigned long>(n);
  CyclotomicNumber e3 = rat(n, C * n2 * k.rho1) +
                        s_at_zeta(un, root_power) * Rational(C * a * n);
  return {CyclotomicNumber(un), CyclotomicNumber(un), rat(n, -C * n2 * k.rho0),
          std::move(e3)};
}

CongruenceReport compare_series(std::string family, const EpsSeries& observed,
                                const std::vector<CyclotomicNumber>& predicted) {
  CongruenceReport report;
  report.family = std::move(family);
  const std::size_t len = std::min<std::size_t>(observed.order(), predicted.size());
  for (std::size_t i = 0; i < len; ++i) {
    const CyclotomicNumber d = observed[i] - predicted[i];
    if (d.is_zero()) continue;
    report.remainder = d.as_poly();
    report.detail = "eps^" + std::to_string(i) + ": observed " + to_string(observed[i]) +
                    ", predicted " + to_string(predicted[i]);
    break;
  }
  report.finalize();
  return report;
}

CongruenceReport verify_lemma1(long a, long b, long n, unsigned long root_power) {
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report = compare_series("lemma1", lemma1_series(a, b, n, 4, root_power),
                            lemma1_prediction(a, b, n, root_power));
  }
  report.set("a", a).set("b", b).set("n", n).set("k", 4);
  if (root_power != 1) report.set("root_power", static_cast<std::int64_t>(root_power));
  return report;
}

EpsSeries lemma3_series(long a, long b, long n, unsigned order) {
  check_ab(a, b, n, 1, "lemma3");
  const auto un = static_cast<unsigned long>(n);
  const Poly weighted = subst_power(q_binomial(a, b), un * un)
                            .shifted(ix(binomial(b * n, 2))) *
                        Rational(sigma_pow(n, b));
  return expand_poly_at_root(weighted + two_monomials(a, b, n), un, order);
}

std::vector<CyclotomicNumber> lemma3_prediction(long a, long b, long n) {
  check_ab(a, b, n, 1, "lemma3");
  const LemmaConstants k = lemma_constants(a, b, n);
  const Rational C(binomial(a, b) * (b * (a - b)));
  const Rational n2(n * n);
  const auto un = static_cast<unsigned long>(n);
  return {CyclotomicNumber(un), CyclotomicNumber(un), rat(n, -C * n2 * k.rho0_hat),
          rat(n, C * n2 * k.rho1_hat)};
}

CongruenceReport verify_lemma3(long a, long b, long n) {
  CongruenceReport report;
  {
    ReportTimer timer(report);
    report = compare_series("lemma3", lemma3_series(a, b, n), lemma3_prediction(a, b, n));
  }
  report.set("a", a).set("b", b).set("n", n).set("k", 4);
  return report;
}

CongruenceReport verify_lemma2_eq3(long n) {
  if (n < 2) throw InvalidArgument("lemma2: need n >= 2");
  CongruenceReport report;
  {
    ReportTimer timer(report);
    const auto un = static_cast<unsigned long>(n);
    const CyclotomicNumber S = s_at_zeta(un);
    const Rational n2m1(n * n - 1);

    // H_{n-1} at zeta(1 - eps)
    const EpsSeries h = expand_ratfun_at_root(harmonic_sum(un), un, 3);
    report = compare_series("lemma2", h,
                            {rat(n, frac(-(n - 1), 2)), rat(n, n2m1 * n / 24), S});
    if (report.holds) {
      // eps = -(q^n - 1)/n + (n-1)(q^n - 1)^2 / (2n^2) + O(eps^3)
      const Poly u = Poly::monomial(1, un) - Poly::constant(1);
      const EpsSeries us = expand_poly_at_root(u, un, 3);
      const EpsSeries eps = us * frac(-1, n) + us * us * frac(n - 1, 2 * n * n);
      report = compare_series("lemma2", eps,
                              {CyclotomicNumber(un), rat(n, 1), CyclotomicNumber(un)});
      if (!report.detail.empty()) report.detail = "eps inversion: " + report.detail;
    }
    if (report.holds) {
      const Poly u = Poly::monomial(1, un) - Poly::constant(1);
      const RationalFunction substitute =
          harmonic_sum(un) +
          RationalFunction(Poly::constant(frac(n - 1, 2)) + u * Rational(n2m1 / 24) -
                           u * u * Rational(Rational(n - 1) * n2m1 / (48 * n)));
      report = compare_series("lemma2", expand_ratfun_at_root(substitute, un, 3),
                              {CyclotomicNumber(un), CyclotomicNumber(un), S});
      if (!report.detail.empty()) report.detail = "eps^2 S substitute: " + report.detail;
    }
  }
  report.set("n", n).set("k", 3);
  return report;
}

}  // namespace qcong
