#include "binomid/numtheory.hpp"

#include "binomid/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace binomid {

namespace {

void require_positive(std::int64_t n, const char *op) {
  if (n < 1)
    throw std::invalid_argument(std::string(op) + ": argument must be >= 1, got " +
                                std::to_string(n));
}

} // namespace

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0)
      continue;
    low.push_back(d);
    if (d != n / d)
      high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require_positive(n, "factorize");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0)
      continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::int64_t prime_power_base(std::int64_t n) {
  if (n < 2)
    return 0;
  const auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto &[p, e] : factorize(n)) {
    if (e > 1)
      return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t result = n;
  for (const auto &[p, e] : factorize(n))
    result = result / p * (p - 1);
  return result;
}

unsigned valuation(std::int64_t p, const BigInt &n) {
  if (!is_prime(p))
    throw std::invalid_argument("valuation: " + std::to_string(p) +
                                " is not prime");
  if (n == 0)
    throw std::invalid_argument("valuation: n must be nonzero");
  BigInt rest = abs(n);
  const BigInt bp = static_cast<long>(p);
  unsigned e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
    ++e;
  }
  return e;
}

namespace {

std::mutex cyclotomic_mutex;
std::map<std::int64_t, CyclotomicPoly> cyclotomic_memo;

// Exact long division of `num` by the monic polynomial `den`.
std::vector<BigInt> divide_exact(std::vector<BigInt> num,
                                 const std::vector<BigInt> &den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dn);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt c = num[i + dn];
    quot[i] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0)
      throw internal_error("cyclotomic: nonzero remainder in exact division");
  return quot;
}

const CyclotomicPoly &cyclotomic_unlocked(std::int64_t n) {
  if (auto it = cyclotomic_memo.find(n); it != cyclotomic_memo.end())
    return it->second;
  // x^n - 1
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, BigInt(0));
  poly.front() = -1;
  poly.back() = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n)
      break;
    poly = divide_exact(std::move(poly), cyclotomic_unlocked(d).coeffs);
  }
  if (static_cast<std::int64_t>(poly.size()) - 1 != euler_phi(n))
    throw internal_error("cyclotomic: degree mismatch for n = " +
                         std::to_string(n));
  auto [it, inserted] =
      cyclotomic_memo.emplace(n, CyclotomicPoly{n, std::move(poly)});
  return it->second;
}

} // namespace

const CyclotomicPoly &cyclotomic(std::int64_t n) {
  require_positive(n, "cyclotomic");
  std::lock_guard lock(cyclotomic_mutex);
  return cyclotomic_unlocked(n);
}

BigInt cyclotomic_eval(std::int64_t n, const BigInt &a, const BigInt &b) {
  const CyclotomicPoly &phi = cyclotomic(n);
  const std::size_t deg = phi.degree();
  // Horner in a, weighting each step by b.
  BigInt acc = 0;
  BigInt bpow = 1;
  for (std::size_t i = deg + 1; i-- > 0;) {
    acc = acc * a + phi.coeffs[i] * bpow;
    bpow *= b;
  }
  return acc;
}

} // namespace binomid
