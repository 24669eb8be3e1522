#include "qcong/qcalc.hpp"

#include <utility>

#include "qcong/cyclo.hpp"
#include "qcong/error.hpp"

namespace qcong {

namespace {

// 1 - q^m
Poly one_minus_q_pow(unsigned long m) {
  return Poly::constant(1) - Poly::monomial(1, m);
}

}  // namespace

Poly q_number(unsigned long a) {
  return Poly(std::vector<Rational>(a, Rational(1)));
}

Poly q_factorial(unsigned long a) {
  Poly r = Poly::constant(1);
  for (unsigned long k = 2; k <= a; ++k) r = r * q_number(k);
  return r;
}

Poly q_binomial(long a, long b) {
  if (a < 0) throw InvalidArgument("q_binomial: a must be >= 0");
  if (b < 0 || b > a) return Poly();
  b = std::min(b, a - b);
  // [a choose j+1] = [a choose j] (1 - q^(a-j)) / (1 - q^(j+1))
  Poly r = Poly::constant(1);
  for (long j = 0; j < b; ++j) {
    r = r - r.shifted(static_cast<std::size_t>(a - j));
    r = exact_div(r, one_minus_q_pow(static_cast<unsigned long>(j + 1)));
  }
  return r;
}

int sign_sigma(unsigned long n) {
  if (n == 0) throw InvalidArgument("sign_sigma: n must be >= 1");
  return n % 2 == 1 ? 1 : -1;
}

XPoly::XPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& XPoly::coeff(std::size_t j) const {
  static const Poly zero;
  return j < c_.size() ? c_[j] : zero;
}

XPoly q_pochhammer_x(unsigned long N) {
  std::vector<Poly> c{Poly::constant(1)};
  for (unsigned long l = 0; l < N; ++l) {
    // multiply by (1 - x q^l)
    std::vector<Poly> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= c[j].shifted(l);
    }
    c = std::move(next);
  }
  return XPoly(std::move(c));
}

XPoly q_binomial_theorem_rhs(unsigned long N) {
  std::vector<Poly> c(N + 1);
  for (unsigned long k = 0; k <= N; ++k) {
    Poly term = q_binomial(static_cast<long>(N), static_cast<long>(k))
                    .shifted(k * (k - (k > 0 ? 1 : 0)) / 2);
    c[k] = (k % 2 == 0) ? term : -term;
  }
  return XPoly(std::move(c));
}

CongruenceReport check_q_binomial_theorem(unsigned long N) {
  CongruenceReport report;
  ReportTimer timer(report);
  report.family = "qbinthm";
  report.set("n", static_cast<std::int64_t>(N)).set("k", 0);
  const XPoly lhs = q_pochhammer_x(N);
  const XPoly rhs = q_binomial_theorem_rhs(N);
  const std::size_t len = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t j = 0; j < len; ++j) {
    Poly d = lhs.coeff(j) - rhs.coeff(j);
    if (!d.is_zero()) {
      report.remainder = std::move(d);
      report.detail = "x^" + std::to_string(j) + " coefficients differ";
      break;
    }
  }
  report.finalize();
  return report;
}

CongruenceReport check_q_lucas(long a, long b, long n) {
  if (b < 0 || b > a) throw InvalidArgument("q-Lucas: need 0 <= b <= a");
  if (n < 2) throw InvalidArgument("q-Lucas: need n >= 2");
  const CycloModulus m(static_cast<unsigned long>(n), 1);
  const Poly lhs = q_binomial(a * n, b * n);
  CongruenceReport report = congruent(lhs, Poly::constant(Rational(binomial(a, b))), m);
  report.family = "qlucas";
  report.params.clear();
  report.set("a", a).set("b", b).set("n", n).set("k", 1);
  report.detail = "reduced value " + to_string(reduce_mod(lhs, m));
  return report;
}

}  // namespace qcong
