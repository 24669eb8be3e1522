#include <cstdint>
#include <vector>

#include "qcong/poly.hpp"

// Univariate gcd over Q by the classical small-primes modular algorithm:
// gcds modulo word-size primes, Chinese remaindering until the lifted
// candidate stabilises, then an exact division check.

namespace qcong {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const std::vector<Integer>& v, u64 p) {
  ModPoly r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
  trim(r);
  return r;
}

// a <- a mod b, b nonzero.
void rem_in_place(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv_lead = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 f = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - b.size();
    if (f != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + p - mulmod(f, b[i], p)) % p;
    a.pop_back();
    trim(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (u64& c : a) c = mulmod(c, inv, p);
  return a;
}

bool is_prime_u64(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

class PrimeStream {
 public:
  u64 next() {
    do --cur_;
    while (!is_prime_u64(cur_));
    return cur_;
  }

 private:
  u64 cur_ = (u64{1} << 31);
};

bool divides(const Poly& d, const Poly& p) {
  return divrem(p, d).rem.is_zero();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);

  const std::vector<Integer> A = primitive_integer_coeffs(a);
  const std::vector<Integer> B = primitive_integer_coeffs(b);
  Integer lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  const Poly pa = Poly::from_integers(A);
  const Poly pb = Poly::from_integers(B);

  PrimeStream primes;
  std::size_t best_len = std::min(A.size(), B.size()) + 1;
  std::vector<Integer> lifted;
  Integer modulus;
  for (;;) {
    const u64 p = primes.next();
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
      continue;
    ModPoly g = gcd_mod(reduce(A, p), reduce(B, p), p);
    if (g.size() == 1) return Poly::constant(1);
    if (g.size() > best_len) continue;  // unlucky prime
    const u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (u64& c : g) c = mulmod(c, scale, p);

    if (g.size() < best_len) {
      best_len = g.size();
      lifted.assign(g.size(), Integer(0));
      for (std::size_t i = 0; i < g.size(); ++i) {
        lifted[i] = static_cast<unsigned long>(g[i]);
        if (g[i] > p / 2) lifted[i] -= static_cast<unsigned long>(p);
      }
      modulus = static_cast<unsigned long>(p);
      continue;
    }

    // Chinese remaindering into the symmetric range of modulus * p.
    const u64 inv_m = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    bool changed = false;
    Integer half;
    const Integer new_modulus = modulus * static_cast<unsigned long>(p);
    half = new_modulus / 2;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const u64 h = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
      const u64 t = mulmod((g[i] + p - h) % p, inv_m, p);
      if (t == 0) continue;
      changed = true;
      lifted[i] += modulus * static_cast<unsigned long>(t);
      if (lifted[i] > half) lifted[i] -= new_modulus;
    }
    modulus = new_modulus;
    if (changed) continue;

    const Poly candidate = primitive_part(Poly::from_integers(lifted));
    if (divides(candidate, pa) && divides(candidate, pb)) return monic(candidate);
  }
}

Poly gcd_primitive_euclid(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divrem(x, y).rem;
    x = std::move(y);
    y = r.is_zero() ? Poly() : primitive_part(r);
  }
  return monic(x);
}

}  // namespace qcong
