#pragma once

// Exact arithmetic in Q(zeta_n), zeta_n a primitive n-th root of unity,
// realised as Q[x] / Phi_n(x) with zeta the class of x.

#include <string>
#include <string_view>
#include <vector>

#include "qcong/poly.hpp"

namespace qcong {

class CyclotomicNumber {
 public:
  /// Zero of Q(zeta_n).
  explicit CyclotomicNumber(unsigned long n);
  CyclotomicNumber(unsigned long n, const Rational& c);

  /// zeta^e for any integer e.
  static CyclotomicNumber zeta_power(unsigned long n, long e);
  /// Class of p(x) modulo Phi_n(x).
  static CyclotomicNumber from_poly(unsigned long n, const Poly& p);

  unsigned long order() const { return n_; }
  /// Exactly phi(n) coefficients of the reduced representative.
  const std::vector<Rational>& residue() const { return residue_; }
  Poly as_poly() const { return Poly(residue_); }
  bool is_zero() const;
  /// Lies in Q (all non-constant residue coefficients vanish).
  bool is_rational() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& s);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a += b;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a -= b;
  }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) { return a *= s; }

  /// Throws ZeroInverse for zero. Extended Euclid against Phi_n.
  CyclotomicNumber inverse() const;
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.n_ == b.n_ && a.residue_ == b.residue_;
  }

 private:
  void check_same(const CyclotomicNumber& o) const;

  unsigned long n_;
  std::vector<Rational> residue_;
};

/// Polynomial in the variable (default "z" for zeta).
std::string to_string(const CyclotomicNumber& c, std::string_view var = "z");

}  // namespace qcong
