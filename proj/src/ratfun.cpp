#include "qcong/ratfun.hpp"

#include <utility>

#include "qcong/error.hpp"

namespace qcong {

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den.is_constant()) {
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rational inv_lead = 1 / den.leading();
  num_ = std::move(num) * inv_lead;
  den_ = std::move(den) * inv_lead;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Trusted{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(a.num_ * b.num_);
  // Cross-cancel first so the products stay small.
  const Poly g1 = gcd(a.num_, b.den_);
  const Poly g2 = gcd(b.num_, a.den_);
  Poly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Poly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  const Rational inv_lead = 1 / d.leading();
  return RationalFunction(std::move(n) * inv_lead, std::move(d) * inv_lead,
                          RationalFunction::Trusted{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction subst_power(const RationalFunction& r, unsigned long m) {
  return RationalFunction(subst_power(r.num(), m), subst_power(r.den(), m));
}

std::string to_string(const RationalFunction& r, std::string_view var) {
  if (r.is_polynomial()) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ") / (" + to_string(r.den(), var) + ")";
}

}  // namespace qcong
