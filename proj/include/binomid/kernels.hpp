#pragma once

// Data-parallel inner loops of the triangle builder and the boxed
// divisibility scan. Each kernel has a serial reference twin; the two must
// produce bit-identical results (tests/kernels_test.cpp).

#include "binomid/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace binomid::kernels {

using Rows = std::vector<std::vector<ExactRational>>;

// <0>, <1>, ..., <N> for terms f_1..f_N.
std::vector<BigInt> factorials(std::span<const BigInt> terms);

// Rows 0..depth of the triangle, entry <n>/(<k><n-k>).
Rows triangle_rows_serial(std::span<const BigInt> factorials, std::int64_t depth);
Rows triangle_rows_parallel(std::span<const BigInt> factorials, std::int64_t depth);

// Same, for a list of rational terms.
Rows rational_triangle_rows(std::span<const ExactRational> terms,
                            std::int64_t depth);

// First (k, m), k-major, with m, k >= 1 and m + k <= bound such that
// f_1...f_k does not divide f_{m+1}...f_{m+k}.
struct BoxedViolation {
  std::int64_t k = 0;
  std::int64_t m = 0;
  ExactRational quotient; // [m+k, k]
};

std::optional<BoxedViolation> boxed_scan_serial(std::span<const BigInt> factorials,
                                                std::int64_t bound);
std::optional<BoxedViolation> boxed_scan_parallel(std::span<const BigInt> factorials,
                                                  std::int64_t bound);

// Threads used by the parallel kernels (OpenMP max threads).
int worker_count();

} // namespace binomid::kernels
