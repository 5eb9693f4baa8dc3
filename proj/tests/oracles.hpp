#pragma once
// Independent reference computations used only by the tests. Nothing here
// calls into the library's arithmetic.

#include "binomid/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using binomid::BigInt;

// [n k] straight from the quotient f_n...f_(n-k+1) / (f_k...f_1).
inline mpq_class fbinom(const std::vector<BigInt> &f, std::int64_t n, std::int64_t k) {
  mpz_class num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= f[n - 1 - i];
    den *= f[i];
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// binom(n, k) table from the additive recurrence only.
inline std::vector<std::vector<BigInt>> pascal(std::int64_t depth) {
  std::vector<std::vector<BigInt>> rows{{1}};
  for (std::int64_t n = 1; n <= depth; ++n) {
    std::vector<BigInt> r(n + 1, 1);
    for (std::int64_t k = 1; k < n; ++k)
      r[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline BigInt binom(long n, long k) {
  if (k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Monomial in x_1, x_2, ... as r -> exponent, zeros kept out.
using Monomial = std::map<std::int64_t, std::int64_t>;

inline void add_monomial(Monomial &a, const Monomial &b, std::int64_t sign) {
  for (auto [r, e] : b) {
    a[r] += sign * e;
    if (a[r] == 0)
      a.erase(r);
  }
}

// <n> over P(X) by multiplying out x_d for every divisor d of every j <= n.
inline Monomial generic_factorial(std::int64_t n) {
  Monomial m;
  for (std::int64_t j = 1; j <= n; ++j)
    for (std::int64_t d = 1; d <= j; ++d)
      if (j % d == 0)
        add_monomial(m, Monomial{{d, 1}}, 1);
  return m;
}

inline Monomial generic_binom(std::int64_t n, std::int64_t k) {
  Monomial m = generic_factorial(n);
  add_monomial(m, generic_factorial(k), -1);
  add_monomial(m, generic_factorial(n - k), -1);
  return m;
}

// [n k] over the column C_m of Delta(P(X)), C_m(N) = [N+m-1, m].
inline Monomial generic_column_binom(std::int64_t m, std::int64_t n, std::int64_t k) {
  Monomial out;
  for (std::int64_t i = n - k + 1; i <= n; ++i)
    add_monomial(out, generic_binom(i + m - 1, m), 1);
  for (std::int64_t i = 1; i <= k; ++i)
    add_monomial(out, generic_binom(i + m - 1, m), -1);
  return out;
}

// Boxed criterion evaluated at one (k, m).
inline bool boxed_holds(const std::vector<BigInt> &f, std::int64_t k, std::int64_t m) {
  BigInt lo = 1, hi = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    lo *= f[i - 1];
    hi *= f[m + i - 1];
  }
  return mpz_divisible_p(hi.get_mpz_t(), lo.get_mpz_t()) != 0;
}

inline std::vector<BigInt> random_nonzero(std::mt19937_64 &rng, std::size_t len, int lo,
                                          int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<BigInt> out;
  while (out.size() < len) {
    const int v = dist(rng);
    if (v != 0)
      out.emplace_back(v);
  }
  return out;
}

} // namespace oracle
