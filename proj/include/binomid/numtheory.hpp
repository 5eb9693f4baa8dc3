#pragma once

#include "binomid/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace binomid {

// Deterministic primality for word-sized inputs (trial division).
bool is_prime(std::int64_t n);

// Positive divisors of n in increasing order. Requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// Prime factorization of n >= 1 as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// If n = p^e with e >= 1, returns p; otherwise 0.
std::int64_t prime_power_base(std::int64_t n);

int mobius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// Exponent of the prime p in n. Sign of n is ignored.
unsigned valuation(std::int64_t p, const BigInt &n);

// Inhomogeneous cyclotomic polynomial Phi_n(x), constant term first.
struct CyclotomicPoly {
  std::int64_t index = 0;
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

// Memoized per process; the returned reference lives for the program.
const CyclotomicPoly &cyclotomic(std::int64_t n);

// Homogeneous value Phi_n(a, b) = sum_i c_i a^i b^(deg - i).
BigInt cyclotomic_eval(std::int64_t n, const BigInt &a, const BigInt &b);

} // namespace binomid
