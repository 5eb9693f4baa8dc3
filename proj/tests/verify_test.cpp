#include "binomid/core.hpp"
#include "binomid/errors.hpp"
#include "binomid/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace binomid;

namespace {
ExponentVector from_monomial(const oracle::Monomial &m) {
  ExponentVector v;
  for (auto [r, e] : m)
    v.add(r, e);
  return v;
}
} // namespace

TEST_CASE("exponent vectors") {
  ExponentVector a{{1, 2}, {3, -1}};
  ExponentVector b{{3, 1}};
  CHECK((a + b) == ExponentVector{{1, 2}});
  CHECK((a - a).empty());
  CHECK_FALSE(a.is_polynomial());
  CHECK((a + b).is_polynomial());
  CHECK(a.to_string() == "{1:2, 3:-1}");
  CHECK(ExponentVector{}.to_string() == "{}");
  CHECK(a[2] == 0);
  CHECK(a.specialize(identity_seq()) == ExactRational(1, 3));
}

TEST_CASE("generic factorial exponents") {
  CHECK(generic_factorial_exponents(6) ==
        ExponentVector{{1, 6}, {2, 3}, {3, 2}, {4, 1}, {5, 1}, {6, 1}});
  CHECK(generic_factorial_exponents(0).empty());
  CHECK(generic_factorial_exponents(4) == ExponentVector{{1, 4}, {2, 2}, {3, 1}, {4, 1}});
  for (std::int64_t n = 0; n <= 30; ++n)
    CHECK(generic_factorial_exponents(n) == from_monomial(oracle::generic_factorial(n)));
}

TEST_CASE("delta") {
  CHECK(delta(2, 6, 4) == 1);
  CHECK(delta(2, 6, 0) == 0);
  for (std::int64_t r = 1; r <= 12; ++r)
    for (std::int64_t m = 0; m < 3 * r; ++m)
      for (std::int64_t j = 0; j < 3 * r; ++j) {
        const int d = delta(m, r, j);
        CHECK((d == 0 || d == 1));
        for (std::int64_t s = 1; s <= 3; ++s) {
          CHECK(delta(m + r * s, r, j) == d);
          CHECK(delta(m, r, j + r * s) == d);
        }
      }
  CHECK_THROWS(delta(1, 0, 1));
}

TEST_CASE("floor lemma over small rationals") {
  // floor(a + b) - floor(a) - floor(b) = [a + b >= 1] for a, b in [0, 1).
  for (long d1 = 1; d1 <= 12; ++d1)
    for (long n1 = 0; n1 < d1; ++n1)
      for (long d2 = 1; d2 <= 12; ++d2)
        for (long n2 = 0; n2 < d2; ++n2) {
          const mpq_class a(n1, d1), b(n2, d2), s = a + b;
          const mpz_class fl = s.get_num() / s.get_den();
          CHECK(fl == (s >= 1 ? 1 : 0));
        }
}

TEST_CASE("delta pattern and window minimality") {
  CHECK(check_delta_pattern(2, 6, 12));
  std::vector<int> got;
  for (std::int64_t j = 0; j < 12; ++j)
    got.push_back(delta(2, 6, j));
  CHECK(got == std::vector<int>{0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1});
  got.clear();
  for (std::int64_t j = 0; j < 8; ++j)
    got.push_back(delta(3, 4, j));
  CHECK(got == std::vector<int>{0, 1, 1, 1, 0, 1, 1, 1});
  CHECK(check_delta_pattern(0, 5, 20));
  CHECK(check_delta_pattern(3, 4, 8));
  CHECK(check_window_minimality(2, 6, 18, 18));
  CHECK(check_window_minimality(0, 5, 10, 10));
  CHECK(check_window_minimality(3, 4, 16, 16));
  CHECK_THROWS(check_delta_pattern(4, 4, 8));
}

TEST_CASE("generic pyramid entry against symbolic expansion") {
  CHECK(generic_pyramid_entry(1, 2, 1) == ExponentVector{{2, 1}});
  CHECK(generic_pyramid_entry(3, 5, 0).empty());
  for (std::int64_t m = 0; m <= 6; ++m)
    for (std::int64_t n = 0; n <= 9; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto v = generic_pyramid_entry(m, n, k);
        CHECK(v == from_monomial(oracle::generic_column_binom(m, n, k)));
        CHECK(v.is_polynomial());
      }
}

TEST_CASE("specialization reproduces concrete pyramid entries") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = oracle::random_nonzero(rng, 30, -9, 9);
    g[0] = 1;
    const auto gs = from_list(g);
    const auto f = divisor_product_of(gs);
    for (std::int64_t n = 0; n <= 10; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        CHECK(from_monomial(oracle::generic_binom(n, k)).specialize(gs) == fbinom(f, n, k));
      }
    for (std::int64_t m = 1; m <= 4; ++m) {
      const auto col = col_seq(f, m);
      for (std::int64_t n = 0; n <= 6; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
          CHECK(generic_pyramid_entry(m, n, k).specialize(gs) == fbinom(col, n, k));
    }
  }
}

TEST_CASE("symmetry") {
  const auto r = check_symmetry(from_list({1, 2, 4, 4, 2, 1}));
  CHECK(r.holds);
  CHECK(fbinom(from_list({1, 2, 4, 4, 2, 1}), 4, 2) == 8);
  CHECK(check_symmetry(pascal_row(7)));
  CHECK(check_symmetry(from_list({1, 1})));
  CHECK_THROWS_AS(check_symmetry(from_list({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS(check_symmetry(identity_seq()));
}

TEST_CASE("slice identity") {
  CHECK(check_slice_identity(identity_seq(), 8, 6, 8));
  CHECK(check_slice_identity(fibonacci(), 8, 6, 8));
  CHECK(check_slice_identity(g_q(2), 8, 6, 8));
  // Row 3 of Delta(C_2) is column 2 of Delta(R_4).
  const auto t = triangle(pascal_column(2), 3);
  const auto r4 = row_seq(identity_seq(), 4);
  for (std::int64_t k = 0; k <= 3; ++k)
    CHECK(fbinom(r4, k + 2, 2) == t.entry(3, k));
  CHECK_THROWS(check_slice_identity(power_seq(2), 3, 3, 3));
}

TEST_CASE("Bareiss determinant") {
  CHECK(bareiss_determinant({{3, 3}, {4, 6}}) == 6);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(bareiss_determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
  CHECK(bareiss_determinant({}) == 1);
}

TEST_CASE("determinant identity") {
  CHECK(check_determinant_identity(3, 1, 2));
  CHECK(check_determinant_identity(5, 2, 3));
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t k = 1; k <= 4; ++k)
      CHECK(check_determinant_identity(m, m, k));
}

TEST_CASE("recurrence step") {
  const auto fib = check_recurrence_step(fibonacci(), 5, 2);
  CHECK(fib.outcome == RecurrenceOutcome::holds);
  CHECK(fib.lhs == fbinom(fibonacci(), 6, 2));
  CHECK(check_recurrence_step(identity_seq(), 4, 2, BigInt(1), BigInt(1)).outcome ==
        RecurrenceOutcome::holds);
  CHECK(check_recurrence_step(g_q(2), 4, 2, BigInt(4), BigInt(1)).outcome ==
        RecurrenceOutcome::holds);
  CHECK(check_recurrence_step(identity_seq(), 4, 2, BigInt(2), BigInt(1)).outcome ==
        RecurrenceOutcome::hypothesis_fails);
  // f = (2, 2, 2, 3): f_4 = u f_2 + v f_2 has no integer solution.
  CHECK(check_recurrence_step(from_list({2, 2, 2, 3}), 3, 2).outcome ==
        RecurrenceOutcome::no_certificate);
  CHECK_THROWS(check_recurrence_step(identity_seq(), 4, 2, BigInt(1), std::nullopt));
}

TEST_CASE("H_m identity") {
  CHECK(check_hm_identity(2, 3, 1));
  CHECK(fbinom(h_m(2), 3, 1) == 15);
  CHECK(fbinom(h_m(3), 4, 2) == 924);
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 0; n <= 8; ++n)
      for (std::int64_t k = 0; k <= n; ++k)
        CHECK(check_hm_identity(m, n, k));
}

TEST_CASE("cyclotomic product") {
  CHECK(check_cyclotomic_product(12, 2, 1));
  CHECK(check_cyclotomic_product(7, -3, 5));
  CHECK(check_cyclotomic_product(1, 0, 0));
}
