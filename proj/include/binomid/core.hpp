#pragma once

#include "binomid/rational.hpp"
#include "binomid/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace binomid {

// <n>_f = f_n f_(n-1) ... f_1, with <0> = 1.
BigInt ffactorial(const Sequence &f, std::int64_t n);

// [n k]_f = <n>_f / (<k>_f <n-k>_f), fully reduced.
// Throws undefined_index when k > n, an index is negative, or f is finite
// and shorter than n.
ExactRational fbinom(const Sequence &f, std::int64_t n, std::int64_t k);

// Entries [n k]_f for 0 <= k <= n <= depth.
class Triangle {
public:
  Triangle(Sequence source, std::int64_t depth,
           std::vector<std::vector<ExactRational>> rows);

  const Sequence &source() const { return source_; }
  std::int64_t depth() const { return depth_; }
  const ExactRational &entry(std::int64_t n, std::int64_t k) const;
  std::span<const ExactRational> row(std::int64_t n) const;
  const std::vector<std::vector<ExactRational>> &rows() const { return rows_; }

  // Lexicographically first (n, k) whose entry is not an integer.
  std::optional<std::pair<std::int64_t, std::int64_t>> first_non_integral() const;
  bool is_integral() const { return !first_non_integral(); }

  friend bool operator==(const Triangle &a, const Triangle &b) {
    return a.depth_ == b.depth_ && a.rows_ == b.rows_;
  }

private:
  Sequence source_;
  std::int64_t depth_;
  std::vector<std::vector<ExactRational>> rows_;
};

// Computes every <n> once and forms entries by exact division. Rows are
// built in parallel; the result equals triangle_serial bit for bit.
Triangle triangle(const Sequence &f, std::int64_t depth);
Triangle triangle_serial(const Sequence &f, std::int64_t depth);

// R_m(N) = [m, N-1]_f, N = 1..m+1. Requires f_1 = 1 and an integral row.
Sequence row_seq(const Sequence &f, std::int64_t m);

// C_j(N) = [N+j-1, j]_f. Requires f_1 = 1; a non-integral entry raises
// non_integral_entry when that term is materialized.
Sequence col_seq(const Sequence &f, std::int64_t j);

// Stack of slices Delta(R_m) for m = 0..depth; slice m holds rows 0..m.
class Pyramid {
public:
  Pyramid(Sequence source, std::int64_t depth, std::vector<Triangle> slices);

  const Sequence &source() const { return source_; }
  std::int64_t depth() const { return depth_; }
  const Triangle &slice(std::int64_t m) const;
  const std::vector<Triangle> &slices() const { return slices_; }

  // First (m, n, k) with a non-integral entry, slice-major.
  std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>>
  first_non_integral() const;

private:
  Sequence source_;
  std::int64_t depth_;
  std::vector<Triangle> slices_;
};

Pyramid pyramid(const Sequence &f, std::int64_t depth);

namespace detail {

// Column j of Delta(f) without the f_1 = 1 restriction. Delta(c f) equals
// Delta(f), so this is the column of the normalized sequence f / f_1.
Sequence column_of(const Sequence &f, std::int64_t j);

// Row m of Delta(f) as exact rationals, no restriction on f_1.
std::vector<ExactRational> row_values(const Sequence &f, std::int64_t m);

// [n k] over an explicit list of rational terms (1-indexed).
ExactRational fbinom_of(std::span<const ExactRational> terms, std::int64_t n,
                        std::int64_t k);

} // namespace detail

} // namespace binomid
