#pragma once

// Cyclotomic polynomials, reduction modulo Phi_n(q)^k and the congruence
// predicate for rational functions.

#include <vector>

#include "qcong/poly.hpp"
#include "qcong/ratfun.hpp"
#include "qcong/report.hpp"

namespace qcong {

/// Phi_n(q), exact and memoized. Safe to call concurrently; the returned
/// reference stays valid for the lifetime of the program.
const Poly& cyclotomic(unsigned long n);

std::vector<unsigned long> divisors(unsigned long n);

/// The modulus Phi_n(q)^k.
class CycloModulus {
 public:
  CycloModulus(unsigned long n, unsigned long k);

  unsigned long n() const { return n_; }
  unsigned long k() const { return k_; }
  const Poly& phi() const { return *phi_; }
  const Poly& phi_pow() const { return phi_pow_; }

 private:
  unsigned long n_;
  unsigned long k_;
  const Poly* phi_;
  Poly phi_pow_;
};

/// Remainder of p on division by Phi_n^k.
Poly reduce_mod(const Poly& p, const CycloModulus& m);

/// A == B (mod Phi_n^k) for rational functions: both denominators must be
/// coprime to Phi_n (else DenominatorNotCoprime), and Phi_n^k must divide the
/// numerator of A - B. The report's remainder is num(A - B) mod Phi_n^k.
CongruenceReport congruent(const RationalFunction& a, const RationalFunction& b,
                           const CycloModulus& m);

}  // namespace qcong
