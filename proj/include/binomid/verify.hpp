#pragma once

#include "binomid/rational.hpp"
#include "binomid/sequence.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace binomid {

// Exponents of a rational monomial prod_r x_r^(v_r). Zero exponents are
// never stored, so equality is map equality.
class ExponentVector {
public:
  ExponentVector() = default;
  ExponentVector(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);

  std::int64_t operator[](std::int64_t r) const;
  void add(std::int64_t r, std::int64_t delta);
  ExponentVector &operator+=(const ExponentVector &o);
  ExponentVector &operator-=(const ExponentVector &o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector &b) {
    return a += b;
  }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector &b) {
    return a -= b;
  }
  friend bool operator==(const ExponentVector &, const ExponentVector &) = default;

  const std::map<std::int64_t, std::int64_t> &exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  // True when every exponent is >= 0, i.e. the monomial is a polynomial.
  bool is_polynomial() const;
  // prod_r g(r)^(v_r) for a concrete sequence g.
  ExactRational specialize(const Sequence &g) const;
  std::string to_string() const;

private:
  std::map<std::int64_t, std::int64_t> exps_;
};

// Outcome of a mechanical check over a finite range.
struct CheckResult {
  bool holds = true;
  std::int64_t cases = 0;
  std::optional<std::string> failure; // first violation, if any

  explicit operator bool() const { return holds; }
};

// v_r(<n>_P(X)) = floor(n / r).
ExponentVector generic_factorial_exponents(std::int64_t n);

// floor((m+j)/r) - floor(m/r) - floor(j/r), always 0 or 1.
int delta(std::int64_t m, std::int64_t r, std::int64_t j);

// delta_(m,r)(j) = [(j mod r) >= r - m] for j < length, 0 <= m < r.
CheckResult check_delta_pattern(std::int64_t m, std::int64_t r, std::int64_t length);

// Sum of the first n deltas is the minimum over all windows of n
// consecutive deltas: 1 <= n <= n_max, 1 <= a <= a_max.
CheckResult check_window_minimality(std::int64_t m, std::int64_t r,
                                    std::int64_t n_max, std::int64_t a_max);

// Exponent vector of [n k]_(C_m), C_m column m of Delta(P(X)).
// Throws internal_error on a negative component.
ExponentVector generic_pyramid_entry(std::int64_t m, std::int64_t n, std::int64_t k);

// For a finite palindromic f of length n, column c of Delta(f) equals row
// n - c for every c. Rejects asymmetric input with std::invalid_argument.
CheckResult check_symmetry(const Sequence &f);

// [n k]_(C_m) = [n k]_(R_(n+m-1)) = [k+m m]_(R_(n+m-1)) for
// 1 <= n <= n_max, 0 <= m <= m_max, 0 <= k <= min(n, k_max).
CheckResult check_slice_identity(const Sequence &f, std::int64_t n_max,
                                 std::int64_t m_max, std::int64_t k_max);

// Fraction-free determinant of an integer matrix (row-major, square).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

// det[binom(n+i, m+j)]_(i,j<k) = [n-m+k k]_(C_m).
CheckResult check_determinant_identity(std::int64_t n, std::int64_t m, std::int64_t k);

enum class RecurrenceOutcome { holds, hypothesis_fails, conclusion_fails, no_certificate };
std::string to_string(RecurrenceOutcome o);

struct RecurrenceCheck {
  RecurrenceOutcome outcome = RecurrenceOutcome::holds;
  BigInt u, v;
  ExactRational lhs, rhs;
};

// If f_(n+1) = u f_(n-k+1) + v f_k then [n+1 k] = u [n k] + v [n k-1].
// With u, v omitted an integer pair is solved for by extended gcd.
RecurrenceCheck check_recurrence_step(const Sequence &f, std::int64_t n, std::int64_t k,
                                      std::optional<BigInt> u = std::nullopt,
                                      std::optional<BigInt> v = std::nullopt);

// <n>_(H_m) = (mn)! / (m!)^n and [n k]_(H_m) = binom(mn, mk).
CheckResult check_hm_identity(std::int64_t m, std::int64_t n, std::int64_t k);

// prod_(d | n) Phi_d(a, b) = a^n - b^n.
CheckResult check_cyclotomic_product(std::int64_t n, const BigInt &a, const BigInt &b);

} // namespace binomid
