#include "qcong/cyclonum.hpp"

#include <algorithm>
#include <utility>

#include "qcong/cyclo.hpp"
#include "qcong/error.hpp"

namespace qcong {

namespace {

std::vector<Rational> padded(const Poly& p, std::size_t len) {
  std::vector<Rational> v(len);
  for (std::size_t i = 0; i < std::min(len, p.size()); ++i) v[i] = p.coeffs()[i];
  return v;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(unsigned long n)
    : n_(n), residue_(euler_phi(n)) {
  if (n == 0) throw InvalidArgument("Q(zeta_n) needs n >= 1");
}

CyclotomicNumber::CyclotomicNumber(unsigned long n, const Rational& c)
    : CyclotomicNumber(n) {
  residue_[0] = c;
}

CyclotomicNumber CyclotomicNumber::from_poly(unsigned long n, const Poly& p) {
  CyclotomicNumber r(n);
  const Poly& phi = cyclotomic(n);
  r.residue_ = padded(p.degree() < phi.degree() ? p : divrem(p, phi).rem,
                      r.residue_.size());
  return r;
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned long n, long e) {
  const long m = static_cast<long>(n);
  const long red = ((e % m) + m) % m;
  return from_poly(n, Poly::monomial(1, static_cast<std::size_t>(red)));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(residue_.begin(), residue_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(residue_.begin() + 1, residue_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

void CyclotomicNumber::check_same(const CyclotomicNumber& o) const {
  if (n_ != o.n_) throw InvalidArgument("mixing different cyclotomic fields");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (Rational& c : r.residue_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] += o.residue_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] -= o.residue_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
  for (Rational& c : residue_) c *= s;
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_same(b);
  if (a.residue_.size() == 1)
    return CyclotomicNumber(a.n_, Rational(a.residue_[0] * b.residue_[0]));
  return CyclotomicNumber::from_poly(a.n_, a.as_poly() * b.as_poly());
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ZeroInverse("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
  if (residue_.size() == 1) return CyclotomicNumber(n_, Rational(1 / residue_[0]));
  // Extended Euclid: track s with s * self == r (mod Phi_n).
  Poly r0 = cyclotomic(n_), r1 = as_poly();
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly s2 = s0 - qr.quot * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0)
    throw ZeroInverse("non-invertible element: Phi_n is not irreducible?");
  return from_poly(n_, s0 * Rational(1 / r0.leading()));
}

std::string to_string(const CyclotomicNumber& c, std::string_view var) {
  return to_string(c.as_poly(), var);
}

}  // namespace qcong
