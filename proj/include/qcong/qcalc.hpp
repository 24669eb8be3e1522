#pragma once

// q-numbers, q-factorials, Gaussian binomials and the q-Pochhammer symbol
// (x; q)_N in an auxiliary variable x.

#include <vector>

#include "qcong/poly.hpp"
#include "qcong/report.hpp"

namespace qcong {

/// [a] = 1 + q + ... + q^(a-1).
Poly q_number(unsigned long a);

/// [a]! = [1][2]...[a], degree a(a-1)/2.
Poly q_factorial(unsigned long a);

/// Gaussian binomial [a choose b]; the zero polynomial for b < 0 or b > a.
/// Built by iterated exact division, so integrality is checked at runtime.
Poly q_binomial(long a, long b);

/// sigma_n = (-1)^(n-1).
int sign_sigma(unsigned long n);

/// Polynomial in x whose coefficients are polynomials in q.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Poly> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Poly>& coeffs() const { return c_; }
  const Poly& coeff(std::size_t j) const;

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<Poly> c_;
};

/// (x; q)_N = prod_{l=0}^{N-1} (1 - x q^l).
XPoly q_pochhammer_x(unsigned long N);

/// sum_k [N choose k] (-x)^k q^(k(k-1)/2).
XPoly q_binomial_theorem_rhs(unsigned long N);

/// Checks (x; q)_N against the q-binomial expansion, coefficient by
/// coefficient. On failure the remainder is the first differing x-coefficient.
CongruenceReport check_q_binomial_theorem(unsigned long N);

/// [an choose bn] == binom(a, b) (mod Phi_n).
CongruenceReport check_q_lucas(long a, long b, long n);

}  // namespace qcong
