#pragma once

// Expansions at q = zeta(1 - eps), eps -> 0, with exact coefficients in
// Q(zeta_n), and the verifiers built on them.

#include <optional>
#include <vector>

#include "qcong/cyclonum.hpp"
#include "qcong/poly.hpp"
#include "qcong/ratfun.hpp"
#include "qcong/report.hpp"

namespace qcong {

/// c_0 + c_1 eps + ... + c_{m-1} eps^{m-1} + O(eps^m).
class EpsSeries {
 public:
  EpsSeries(unsigned long n, unsigned order);
  EpsSeries(unsigned long n, std::vector<CyclotomicNumber> coeffs);

  static EpsSeries constant(unsigned long n, unsigned order, const Rational& c);
  /// (1 - eps)^N for any integer N.
  static EpsSeries one_minus_eps_pow(unsigned long n, unsigned order, const Integer& N);

  unsigned long field() const { return n_; }
  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  const std::vector<CyclotomicNumber>& coeffs() const { return c_; }
  const CyclotomicNumber& operator[](std::size_t i) const { return c_[i]; }
  /// All coefficients below eps^k vanish.
  bool vanishes_through(unsigned k) const;

  EpsSeries operator-() const;
  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const Rational& s);
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(EpsSeries a, const Rational& s) { return a *= s; }
  /// Throws DenominatorVanishes when c_0 = 0.
  EpsSeries inverse() const;

 private:
  void check_same(const EpsSeries& o) const;

  unsigned long n_;
  std::vector<CyclotomicNumber> c_;
};

/// Substitutes q = w (1 - eps) with w = zeta^root_power (root_power coprime
/// to n selects another primitive root).
EpsSeries expand_poly_at_root(const Poly& p, unsigned long n, unsigned order,
                              unsigned long root_power = 1);

/// Throws DenominatorVanishes when Phi_n divides the denominator.
EpsSeries expand_ratfun_at_root(const RationalFunction& r, unsigned long n,
                                unsigned order, unsigned long root_power = 1);

struct LemmaConstants {
  Rational rho0;
  Rational rho1;
  Rational rho0_hat;
  Rational rho1_hat;
};

LemmaConstants lemma_constants(long a, long b, long n);

/// S_{n-1} evaluated at zeta^root_power by field arithmetic.
CyclotomicNumber s_at_zeta(unsigned long n, unsigned long root_power = 1);

/// [an choose bn] sigma_n^b q^C(bn,2) - C(a-1,b) - C(a-1,a-b) sigma_n^a q^C(an,2)
/// expanded at the root.
EpsSeries lemma1_series(long a, long b, long n, unsigned order = 4,
                        unsigned long root_power = 1);
/// Predicted eps^0..eps^3 coefficients of lemma1_series.
std::vector<CyclotomicNumber> lemma1_prediction(long a, long b, long n,
                                                unsigned long root_power = 1);
CongruenceReport verify_lemma1(long a, long b, long n, unsigned long root_power = 1);

/// Same combination with [a choose b] in base q^{n^2}.
EpsSeries lemma3_series(long a, long b, long n, unsigned order = 4);
std::vector<CyclotomicNumber> lemma3_prediction(long a, long b, long n);
CongruenceReport verify_lemma3(long a, long b, long n);

/// The H_{n-1} expansion to O(eps^3), the inversion of eps in terms of
/// q^n - 1, and the (q^n - 1)-form substitute for eps^2 S_{n-1}(zeta).
CongruenceReport verify_lemma2_eq3(long n);

/// Compares observed coefficients with predicted ones; the first mismatch
/// becomes the remainder (as a polynomial in zeta).
CongruenceReport compare_series(std::string family, const EpsSeries& observed,
                                const std::vector<CyclotomicNumber>& predicted);

enum class ProofIdentity { RootFilter, Summations, Exceptional, CongAsymp };

struct ProofIdentityParams {
  long a = 1;
  long b = 0;
  long n = 1;
  /// Residue classes for the summation formulae; all valid ones when unset.
  std::optional<long> k;
  std::optional<long> l;
  std::vector<Rational> q_samples{Rational(2), Rational(1, 3), Rational(-3, 2)};
  std::vector<Rational> x_samples{Rational(1, 3), Rational(2, 7), Rational(-5, 2)};
};

CongruenceReport verify_proof_identities(ProofIdentity kind,
                                         const ProofIdentityParams& params);

/// The constrained sums
///   triple: sum over l1 == l2 != l3 (mod n) of l1 l2 l3 w(l3 - l1)
///   pair:   sum over l1 != l2 (mod n) of l1^2 l2 w(l2 - l1)
/// with 1 <= l_i <= an - 1 and w(r) = zeta^r / (1 - zeta^r).
struct ExceptionalSums {
  CyclotomicNumber triple;
  CyclotomicNumber pair;
};

/// Term-by-term accumulation in Q(zeta); serial reference.
ExceptionalSums exceptional_sums_reference(long a, long n);
/// Enumerates every index tuple in parallel, bucketing the integer weights by
/// residue of the exponent; deterministic.
ExceptionalSums exceptional_sums(long a, long n);
/// The closed forms in terms of S_{n-1}(zeta).
ExceptionalSums exceptional_closed_forms(long a, long n);

}  // namespace qcong
