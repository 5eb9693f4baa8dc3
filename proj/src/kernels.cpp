#include "binomid/kernels.hpp"

#include <omp.h>

#include <stdexcept>

namespace binomid::kernels {

namespace {

void check_depth(std::span<const BigInt> factorials, std::int64_t depth) {
  if (depth < 0 || static_cast<std::size_t>(depth) >= factorials.size())
    throw std::out_of_range("triangle kernel: depth exceeds available factorials");
}

std::vector<ExactRational> triangle_row(std::span<const BigInt> fact,
                                        std::int64_t n) {
  std::vector<ExactRational> row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  const auto &top = fact[static_cast<std::size_t>(n)];
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt den = fact[static_cast<std::size_t>(k)] *
                       fact[static_cast<std::size_t>(n - k)];
    row.emplace_back(top, den);
  }
  return row;
}

std::optional<BoxedViolation> first_in_column(std::span<const BigInt> fact,
                                              std::int64_t k,
                                              std::int64_t bound) {
  const BigInt &base = fact[static_cast<std::size_t>(k)];
  BigInt window;
  for (std::int64_t m = 1; m + k <= bound; ++m) {
    mpz_divexact(window.get_mpz_t(), fact[static_cast<std::size_t>(m + k)].get_mpz_t(),
                 fact[static_cast<std::size_t>(m)].get_mpz_t());
    if (!mpz_divisible_p(window.get_mpz_t(), base.get_mpz_t()))
      return BoxedViolation{k, m, ExactRational(window, base)};
  }
  return std::nullopt;
}

void check_bound(std::span<const BigInt> fact, std::int64_t bound) {
  if (bound < 0 || static_cast<std::size_t>(bound) >= fact.size())
    throw std::out_of_range("boxed scan: bound exceeds available factorials");
}

} // namespace

std::vector<BigInt> factorials(std::span<const BigInt> terms) {
  std::vector<BigInt> out;
  out.reserve(terms.size() + 1);
  out.emplace_back(1);
  for (const auto &t : terms)
    out.push_back(out.back() * t);
  return out;
}

Rows triangle_rows_serial(std::span<const BigInt> fact, std::int64_t depth) {
  check_depth(fact, depth);
  Rows rows;
  rows.reserve(static_cast<std::size_t>(depth) + 1);
  for (std::int64_t n = 0; n <= depth; ++n)
    rows.push_back(triangle_row(fact, n));
  return rows;
}

Rows triangle_rows_parallel(std::span<const BigInt> fact, std::int64_t depth) {
  check_depth(fact, depth);
  Rows rows(static_cast<std::size_t>(depth) + 1);
  // Row n costs O(n) big divisions; dynamic scheduling balances the tail.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t n = depth; n >= 0; --n)
    rows[static_cast<std::size_t>(n)] = triangle_row(fact, n);
  return rows;
}

Rows rational_triangle_rows(std::span<const ExactRational> terms,
                            std::int64_t depth) {
  if (depth < 0 || static_cast<std::size_t>(depth) > terms.size())
    throw std::out_of_range("rational triangle: depth exceeds term count");
  std::vector<ExactRational> fact{ExactRational(1)};
  for (std::int64_t n = 1; n <= depth; ++n)
    fact.push_back(fact.back() * terms[static_cast<std::size_t>(n - 1)]);
  Rows rows;
  for (std::int64_t n = 0; n <= depth; ++n) {
    auto &row = rows.emplace_back();
    for (std::int64_t k = 0; k <= n; ++k)
      row.push_back(fact[static_cast<std::size_t>(n)] /
                    (fact[static_cast<std::size_t>(k)] *
                     fact[static_cast<std::size_t>(n - k)]));
  }
  return rows;
}

std::optional<BoxedViolation> boxed_scan_serial(std::span<const BigInt> fact,
                                                std::int64_t bound) {
  check_bound(fact, bound);
  for (std::int64_t k = 1; k < bound; ++k)
    if (auto v = first_in_column(fact, k, bound))
      return v;
  return std::nullopt;
}

std::optional<BoxedViolation> boxed_scan_parallel(std::span<const BigInt> fact,
                                                  std::int64_t bound) {
  check_bound(fact, bound);
  if (bound < 2)
    return std::nullopt;
  std::vector<std::optional<BoxedViolation>> per_k(static_cast<std::size_t>(bound));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 1; k < bound; ++k)
    per_k[static_cast<std::size_t>(k)] = first_in_column(fact, k, bound);
  for (auto &v : per_k)
    if (v)
      return std::move(v);
  return std::nullopt;
}

int worker_count() { return omp_get_max_threads(); }

} // namespace binomid::kernels
