#pragma once

// Dense integer convolution kernels behind Poly multiplication.
//
// mul_schoolbook is the serial reference; every other kernel must agree with
// it bit for bit. bench/bench_kernels.cpp compares them and is what the
// default Karatsuba threshold was picked from.

#include <cstddef>
#include <span>
#include <vector>

#include "qcong/numeric.hpp"

namespace qcong::kernels {

using IntVec = std::vector<Integer>;

/// Operand length (of the shorter factor) below which Karatsuba falls back
/// to schoolbook.
inline constexpr std::size_t kKaratsubaThreshold = 24;

/// Product length at which Karatsuba spawns OpenMP tasks for its three
/// sub-products (only when not already inside a parallel region).
inline constexpr std::size_t kParallelTaskThreshold = 512;

IntVec mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b);

/// Schoolbook with the output coefficients distributed over OpenMP threads.
IntVec mul_schoolbook_omp(std::span<const Integer> a,
                          std::span<const Integer> b);

IntVec mul_karatsuba(std::span<const Integer> a, std::span<const Integer> b,
                     std::size_t threshold = kKaratsubaThreshold);

/// Production entry point used by Poly.
IntVec mul_dense(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace qcong::kernels
