#pragma once

// Builders and verifiers for the q-binomial congruences modulo powers of
// Phi_n(q): Straub's, the two-monomial one, Andrews', Pan's, their mod Phi^4
// extensions, the q-harmonic congruences, and the integer (p-adic) versions.

#include <string_view>

#include "qcong/cyclo.hpp"
#include "qcong/ratfun.hpp"
#include "qcong/report.hpp"

namespace qcong {

/// H_{n-1}(q) = sum_{k=1}^{n-1} q^k / (1 - q^k).
RationalFunction harmonic_sum(unsigned long n);

/// S_{n-1}(q) = 1/2 sum_{k=1}^{n-1} k q^k ((k+1) q^k + k - 1) / (1 - q^k)^3.
RationalFunction s_sum(unsigned long n);

/// Both sides of a congruence, with the right-hand side split into its main
/// part and the correction term so tests can delete the latter.
struct CongruenceSides {
  RationalFunction lhs;
  RationalFunction main;
  RationalFunction correction;
  CycloModulus modulus;

  RationalFunction rhs() const { return main + correction; }
};

struct VerifyOptions {
  /// The theorems are stated for n > 1; n = 1 is only evaluated on request
  /// and is then reported without any claim attached.
  bool allow_n1 = false;
};

enum class KnownCongruence {
  Straub2,    // mod Phi^3, base q^{n^2}
  Monomial3,  // mod Phi^2, two q-monomials
  Andrews4,   // mod Phi^2, base q^n
  Pan5,       // mod Phi^3, base q^n
};

std::string_view family_name(KnownCongruence f);

CongruenceSides known_congruence_sides(KnownCongruence f, long a, long b, long n,
                                       VerifyOptions opts = {});
CongruenceReport verify_known_congruence(KnownCongruence f, long a, long b, long n,
                                         VerifyOptions opts = {});

/// [an choose bn] against [a choose b]_{q^{n^2}} with the harmonic correction,
/// modulo Phi_n^4.
CongruenceSides theorem1_sides(long a, long b, long n, VerifyOptions opts = {});
CongruenceReport verify_theorem1(long a, long b, long n, VerifyOptions opts = {});

/// [an choose bn] against the sign/monomial-weighted [a choose b]_{q^n} with
/// the harmonic correction, modulo Phi_n^4.
CongruenceSides theorem2_sides(long a, long b, long n, VerifyOptions opts = {});
CongruenceReport verify_theorem2(long a, long b, long n, VerifyOptions opts = {});

/// H_{n-1} against its (q^n - 1)-expansion modulo Phi_n^k, k in {2, 3}.
CongruenceSides harmonic_sides(long n, int k);
CongruenceReport verify_harmonic_congruence(long n, int k);

/// Level 3: binom(ap, bp) - binom(a, b). Level 4: the same minus
/// ab(a-b) binom(a, b) p H_{p-1}, an exact rational.
Rational classical_difference(long a, long b, long p, int level);

/// p^level divides the numerator of classical_difference and p does not
/// divide its denominator. Needs p prime and p > 3.
CongruenceReport verify_classical_integer(long a, long b, long p, int level);

/// Shared: congruent(lhs, rhs) relabelled with a family name and parameters.
CongruenceReport verify_sides(const CongruenceSides& sides, std::string_view family);

}  // namespace qcong
