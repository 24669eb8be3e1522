#pragma once

#include <string>
#include <string_view>

#include "qcong/poly.hpp"

namespace qcong {

/// num/den kept normalized: den is nonzero and monic, gcd(num, den) = 1, and
/// the zero function is 0/1. Equality compares normalized forms.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(Poly num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Poly::constant(c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  /// Throws DivisionByZero when b is zero.
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Trusted {};
  RationalFunction(Poly num, Poly den, Trusted)
      : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RationalFunction subst_power(const RationalFunction& r, unsigned long m);

/// "num" for polynomials, "(num) / (den)" otherwise.
std::string to_string(const RationalFunction& r, std::string_view var = "q");

}  // namespace qcong
