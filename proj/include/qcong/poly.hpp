#pragma once

// Dense univariate polynomials in q with exact rational coefficients.

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/numeric.hpp"

namespace qcong {

/// degree() of the zero polynomial.
inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

/// Coefficient i is the coefficient of q^i. The highest stored coefficient is
/// always nonzero; the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  /// Coefficients must be in canonical form (as gmpxx requires).
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t exponent);
  static Poly from_integers(const std::vector<Integer>& coeffs);

  long degree() const {
    return c_.empty() ? kZeroPolyDegree : static_cast<long>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// True iff every coefficient has denominator 1.
  bool is_integral() const { return integral_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  std::size_t size() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Zero beyond the stored range.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;

  /// Multiplication by q^k.
  Poly shifted(std::size_t k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void normalize();

  std::vector<Rational> c_;
  bool integral_ = true;
};

struct DivRem {
  Poly quot;
  Poly rem;
};

/// P = Q * quot + rem with deg rem < deg Q. Throws DivisionByZero for Q = 0.
DivRem divrem(const Poly& p, const Poly& q);

/// Quotient of an exact division; throws NotDivisible on nonzero remainder.
Poly exact_div(const Poly& p, const Poly& q);

/// P(q^m).
Poly subst_power(const Poly& p, unsigned long m);

Poly pow(Poly base, unsigned long e);

/// Product of many factors via a balanced tree.
Poly product(std::vector<Poly> factors);

/// Divides by the leading coefficient; zero stays zero.
Poly monic(const Poly& p);

/// Integral primitive part with positive leading coefficient.
Poly primitive_part(const Poly& p);

/// Primitive integer coefficients of p (positive leading coefficient).
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

/// Monic gcd over Q; gcd(0, 0) = 0. Uses a modular algorithm with a
/// division check.
Poly gcd(const Poly& a, const Poly& b);

/// Primitive Euclidean algorithm; the slow reference for gcd.
Poly gcd_primitive_euclid(const Poly& a, const Poly& b);

/// Descending powers, explicit " + " / " - ", integer coefficients written
/// juxtaposed ("2q^2"), other rationals parenthesised ("(3/2)q^2").
std::string to_string(const Poly& p, std::string_view var = "q");

}  // namespace qcong
