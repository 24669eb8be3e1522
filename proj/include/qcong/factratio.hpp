#pragma once

// q-analogues of Chebyshev-Landau factorial ratios
//   D_n(q) = [a_1 n]! ... [a_r n]! / ([b_1 n]! ... [b_s n]!)
// and their congruences modulo Phi_n(q)^3.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/qcong.hpp"
#include "qcong/ratfun.hpp"
#include "qcong/report.hpp"

namespace qcong {

class FactorialRatioSpec {
 public:
  /// Throws InvalidArgument when an entry is < 1 or a list is empty.
  FactorialRatioSpec(std::vector<long> num, std::vector<long> den);

  /// "a1,a2,.../b1,b2,..." (whitespace ignored). Throws ParseError.
  static FactorialRatioSpec parse(std::string_view text);

  const std::vector<long>& num_params() const { return a_; }
  const std::vector<long>& den_params() const { return b_; }

  bool balanced() const;
  bool landau_integral() const;
  /// A point x in (0, 1] where the floor-sum inequality fails.
  std::optional<Rational> witness() const;

  /// Swaps numerator and denominator lists.
  FactorialRatioSpec reciprocal() const;
  /// Componentwise union of the parameter lists (the product of the ratios).
  FactorialRatioSpec concat(const FactorialRatioSpec& other) const;

  friend bool operator==(const FactorialRatioSpec& x, const FactorialRatioSpec& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::vector<long> a_;
  std::vector<long> b_;
  // Filled at construction; the scan is cheap.
  std::optional<Rational> witness_;
};

std::string to_string(const FactorialRatioSpec& spec);

struct SpecValidation {
  bool balanced = false;
  bool integral = false;
  std::optional<Rational> witness;
};

SpecValidation validate_spec(const FactorialRatioSpec& spec);

/// sum floor(a_i x) - sum floor(b_j x).
Integer floor_excess(const FactorialRatioSpec& spec, const Rational& x);

/// D_n(q), normalized. Throws NotBalanced. For integral specs the result is
/// checked to be a polynomial with integer coefficients.
RationalFunction factorial_ratio(const FactorialRatioSpec& spec, unsigned long n);

/// D_n(1) = prod (a_i n)! / prod (b_j n)!.
Rational ratio_at_one(const FactorialRatioSpec& spec, unsigned long n);

/// c_i = sum binom(a_j, i) - sum binom(b_j, i), i in {2, 3}.
Integer c_coeff(const FactorialRatioSpec& spec, int i);

enum class Theorem3Variant { StraubG, PanG };

std::string_view variant_name(Theorem3Variant v);

/// D_n against its mod Phi_n^3 approximation. n >= 1.
CongruenceSides theorem3_sides(const FactorialRatioSpec& spec, long n, Theorem3Variant v);
CongruenceReport verify_theorem3(const FactorialRatioSpec& spec, long n, Theorem3Variant v);

/// Candidate mod Phi_n^4 analogues of theorem1 (StraubG) and theorem2 (PanG)
/// with a * c_2 replaced by 2 (c_2 + c_3). They coincide with the proven
/// statements on binomial specs; for other specs the outcome is only
/// reported, never asserted. n >= 2.
CongruenceSides theorem3_phi4_sides(const FactorialRatioSpec& spec, long n, Theorem3Variant v);
CongruenceReport explore_theorem3_phi4(const FactorialRatioSpec& spec, long n, Theorem3Variant v);

/// D_p(1) == D_1(1) (mod p^3) with exact factorials. Needs an integral,
/// balanced spec and a prime p > 3.
CongruenceReport verify_classical_ratio(const FactorialRatioSpec& spec, long p);

}  // namespace qcong
