#include "qcong/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace qcong::kernels {

namespace {

void add_into(IntVec& dst, std::size_t offset, const IntVec& src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] += src[i];
}

IntVec add_parts(std::span<const Integer> x, std::span<const Integer> y) {
  IntVec r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

IntVec karatsuba_rec(std::span<const Integer> a, std::span<const Integer> b,
                     std::size_t threshold, bool spawn) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb < threshold || nb < 2) return mul_schoolbook(a, b);

  if (2 * nb <= na) {
    // Unbalanced: slice the long operand into nb-sized chunks.
    IntVec r(na + nb - 1);
    for (std::size_t off = 0; off < na; off += nb) {
      const std::size_t len = std::min(nb, na - off);
      add_into(r, off, karatsuba_rec(a.subspan(off, len), b, threshold, spawn));
    }
    return r;
  }

  // Here nb > na / 2 >= m, so both high halves are nonempty.
  const std::size_t m = na / 2;
  auto a0 = a.first(m), a1 = a.subspan(m);
  auto b0 = b.first(m), b1 = b.subspan(m);
  const IntVec sa = add_parts(a0, a1);
  const IntVec sb = add_parts(b0, b1);

  IntVec z0, z1, z2;
  const bool par = spawn && na + nb >= kParallelTaskThreshold;
  if (par) {
#pragma omp task shared(z0)
    z0 = karatsuba_rec(a0, b0, threshold, spawn);
#pragma omp task shared(z2)
    z2 = karatsuba_rec(a1, b1, threshold, spawn);
    z1 = karatsuba_rec(sa, sb, threshold, spawn);
#pragma omp taskwait
  } else {
    z0 = karatsuba_rec(a0, b0, threshold, false);
    z2 = karatsuba_rec(a1, b1, threshold, false);
    z1 = karatsuba_rec(sa, sb, threshold, false);
  }
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  IntVec r(na + nb - 1);
  add_into(r, 0, z0);
  add_into(r, 2 * m, z2);
  // z1 may carry trailing zeros beyond the product length.
  for (std::size_t i = 0; i < z1.size() && m + i < r.size(); ++i)
    r[m + i] += z1[i];
  return r;
}

}  // namespace

IntVec mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  IntVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

IntVec mul_schoolbook_omp(std::span<const Integer> a,
                          std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  const long len = static_cast<long>(a.size() + b.size() - 1);
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  IntVec r(static_cast<std::size_t>(len));
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < len; ++k) {
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    mpz_ptr acc = r[static_cast<std::size_t>(k)].get_mpz_t();
    for (long i = lo; i <= hi; ++i)
      mpz_addmul(acc, a[static_cast<std::size_t>(i)].get_mpz_t(),
                 b[static_cast<std::size_t>(k - i)].get_mpz_t());
  }
  return r;
}

IntVec mul_karatsuba(std::span<const Integer> a, std::span<const Integer> b,
                     std::size_t threshold) {
  threshold = std::max<std::size_t>(threshold, 2);
  const bool spawn = !omp_in_parallel() && omp_get_max_threads() > 1 &&
                     a.size() + b.size() >= kParallelTaskThreshold;
  if (!spawn) return karatsuba_rec(a, b, threshold, false);
  IntVec r;
#pragma omp parallel
#pragma omp single
  r = karatsuba_rec(a, b, threshold, true);
  return r;
}

IntVec mul_dense(std::span<const Integer> a, std::span<const Integer> b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
    return mul_schoolbook(a, b);
  return mul_karatsuba(a, b);
}

}  // namespace qcong::kernels
