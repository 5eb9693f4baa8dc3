#include "binomid/numtheory.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace binomid;

TEST_CASE("primality and divisors agree with brute force") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0)
        ds.push_back(d);
    CHECK(divisors(n) == ds);
    CHECK(is_prime(n) == (ds.size() == 2));
  }
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK(is_prime(1'000'000'007));
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t back = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i)
        back *= p;
    }
    CHECK(back == n);
  }
  CHECK(factorize(1).empty());
  CHECK(prime_power_base(81) == 3);
  CHECK(prime_power_base(12) == 0);
  CHECK(prime_power_base(1) == 0);
  CHECK(prime_power_base(13) == 13);
}

TEST_CASE("mobius and phi match brute-force definitions") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t count = 0;
    for (std::int64_t j = 1; j <= n; ++j)
      count += std::gcd(j, n) == 1;
    CHECK(euler_phi(n) == count);

    int mu = 1;
    for (auto [p, e] : factorize(n))
      mu = e > 1 ? 0 : -mu;
    CHECK(mobius(n) == mu);

    // sum_{d | n} mu(d) = [n = 1]
    int s = 0;
    for (auto d : divisors(n))
      s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(2, BigInt(96)) == 5);
  CHECK(valuation(3, BigInt(-81)) == 4);
  CHECK(valuation(5, BigInt(7)) == 0);
  CHECK(valuation(2, BigInt("1267650600228229401496703205376")) == 100);
  CHECK_THROWS(valuation(4, BigInt(16)));
  CHECK_THROWS(valuation(2, BigInt(0)));
}

TEST_CASE("cyclotomic coefficients") {
  CHECK(cyclotomic(1).coeffs == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic(2).coeffs == std::vector<BigInt>{1, 1});
  CHECK(cyclotomic(6).coeffs == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic(12).coeffs == std::vector<BigInt>{1, 0, -1, 0, 1});
  for (std::int64_t n = 1; n <= 120; ++n)
    CHECK(cyclotomic(n).degree() == static_cast<std::size_t>(euler_phi(n)));
  // 105 is the first index with a coefficient outside {-1, 0, 1}.
  bool has_minus_two = false;
  for (const auto &c : cyclotomic(105).coeffs)
    has_minus_two |= c == -2;
  CHECK(has_minus_two);
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("homogeneous cyclotomic values") {
  // Phi_n(2) for n = 1..10, which is G_2 under Moebius inversion.
  const std::vector<long> want{1, 3, 7, 5, 31, 3, 127, 17, 73, 11};
  for (std::int64_t n = 1; n <= 10; ++n)
    CHECK(cyclotomic_eval(n, 2, 1) == want[n - 1]);
  // Phi_n(a, b) = b^deg Phi_n(a / b); check against x^n - y^n directly.
  for (std::int64_t n = 1; n <= 30; ++n)
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        BigInt prod = 1;
        for (auto d : divisors(n))
          prod *= cyclotomic_eval(d, a, b);
        CHECK(prod == ipow(a, n) - ipow(b, n));
      }
}
