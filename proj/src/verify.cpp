#include "binomid/verify.hpp"

#include "binomid/core.hpp"
#include "binomid/errors.hpp"
#include "binomid/numtheory.hpp"

#include <sstream>
#include <stdexcept>

namespace binomid {

ExponentVector::ExponentVector(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  for (const auto &[r, e] : init)
    add(r, e);
}

std::int64_t ExponentVector::operator[](std::int64_t r) const {
  const auto it = exps_.find(r);
  return it == exps_.end() ? 0 : it->second;
}

void ExponentVector::add(std::int64_t r, std::int64_t delta) {
  if (r < 1)
    throw std::invalid_argument("ExponentVector: indices start at 1");
  if (delta == 0)
    return;
  const std::int64_t e = (exps_[r] += delta);
  if (e == 0)
    exps_.erase(r);
}

ExponentVector &ExponentVector::operator+=(const ExponentVector &o) {
  for (const auto &[r, e] : o.exps_)
    add(r, e);
  return *this;
}

ExponentVector &ExponentVector::operator-=(const ExponentVector &o) {
  for (const auto &[r, e] : o.exps_)
    add(r, -e);
  return *this;
}

bool ExponentVector::is_polynomial() const {
  for (const auto &[r, e] : exps_)
    if (e < 0)
      return false;
  return true;
}

ExactRational ExponentVector::specialize(const Sequence &g) const {
  BigInt num = 1, den = 1;
  for (const auto &[r, e] : exps_) {
    if (e > 0)
      num *= ipow(g.term(r), static_cast<unsigned long>(e));
    else
      den *= ipow(g.term(r), static_cast<unsigned long>(-e));
  }
  return ExactRational(num, den);
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto &[r, e] : exps_) {
    os << (first ? "" : ", ") << r << ':' << e;
    first = false;
  }
  os << '}';
  return os.str();
}

ExponentVector generic_factorial_exponents(std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("generic_factorial_exponents: n must be >= 0");
  ExponentVector v;
  for (std::int64_t r = 1; r <= n; ++r)
    v.add(r, n / r);
  return v;
}

int delta(std::int64_t m, std::int64_t r, std::int64_t j) {
  if (r < 1 || m < 0 || j < 0)
    throw std::invalid_argument("delta: requires r >= 1 and m, j >= 0");
  return static_cast<int>((m + j) / r - m / r - j / r);
}

CheckResult check_delta_pattern(std::int64_t m, std::int64_t r, std::int64_t length) {
  if (m < 0 || m >= r || length < r)
    throw std::invalid_argument("check_delta_pattern: requires 0 <= m < r <= length");
  CheckResult out;
  for (std::int64_t j = 0; j < length; ++j, ++out.cases) {
    const int expected = (j % r) >= r - m ? 1 : 0;
    if (delta(m, r, j) != expected) {
      out.holds = false;
      out.failure = "delta_(" + std::to_string(m) + "," + std::to_string(r) + ")(" +
                    std::to_string(j) + ") breaks the zeros-then-ones pattern";
      break;
    }
  }
  return out;
}

CheckResult check_window_minimality(std::int64_t m, std::int64_t r,
                                    std::int64_t n_max, std::int64_t a_max) {
  if (r < 1 || m < 0)
    throw std::invalid_argument("check_window_minimality: requires r >= 1, m >= 0");
  std::vector<std::int64_t> prefix{0};
  for (std::int64_t j = 0; j < n_max + a_max; ++j)
    prefix.push_back(prefix.back() + delta(m, r, j));
  CheckResult out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t a = 1; a <= a_max; ++a, ++out.cases)
      if (prefix[n] > prefix[a + n] - prefix[a]) {
        out.holds = false;
        out.failure = "window a = " + std::to_string(a) + ", n = " + std::to_string(n) +
                      " sums below the initial window";
        return out;
      }
  return out;
}

ExponentVector generic_pyramid_entry(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 0 || k < 0 || k > n)
    throw std::invalid_argument("generic_pyramid_entry: requires m >= 0, 0 <= k <= n");
  ExponentVector v;
  for (std::int64_t r = 1; r <= m + n; ++r) {
    std::int64_t e = 0;
    for (std::int64_t j = n - k; j < n; ++j)
      e += delta(m, r, j);
    for (std::int64_t j = 0; j < k; ++j)
      e -= delta(m, r, j);
    if (e < 0)
      throw internal_error("generic_pyramid_entry: negative exponent of x_" +
                           std::to_string(r) + " at (m, n, k) = (" + std::to_string(m) +
                           ", " + std::to_string(n) + ", " + std::to_string(k) + ")");
    v.add(r, e);
  }
  return v;
}

CheckResult check_symmetry(const Sequence &f) {
  if (!f.length())
    throw std::invalid_argument("check_symmetry: sequence must be finite");
  const std::int64_t n = *f.length();
  for (std::int64_t k = 1; k <= n; ++k)
    if (f.term(k) != f.term(n + 1 - k))
      throw std::invalid_argument("check_symmetry: f_" + std::to_string(k) +
                                  " != f_" + std::to_string(n + 1 - k));
  const Triangle t = triangle(f, n);
  CheckResult out;
  for (std::int64_t c = 0; c <= n; ++c)
    for (std::int64_t k = 0; k <= n - c; ++k, ++out.cases)
      if (t.entry(c + k, k) != t.entry(n - c, k)) {
        out.holds = false;
        out.failure = "column " + std::to_string(c) + " differs from row " +
                      std::to_string(n - c) + " at position " + std::to_string(k);
        return out;
      }
  return out;
}

CheckResult check_slice_identity(const Sequence &f, std::int64_t n_max,
                                 std::int64_t m_max, std::int64_t k_max) {
  if (f.term(1) != 1)
    throw std::invalid_argument("check_slice_identity: requires f_1 = 1");
  CheckResult out;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    std::vector<ExactRational> column;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      column.push_back(fbinom(f, n + m - 1, m));
      std::vector<ExactRational> row;
      for (std::int64_t i = 0; i <= n + m - 1; ++i)
        row.push_back(fbinom(f, n + m - 1, i));
      for (std::int64_t k = 0; k <= std::min(n, k_max); ++k, ++out.cases) {
        const auto lhs = detail::fbinom_of(column, n, k);
        const auto mid = detail::fbinom_of(row, n, k);
        const auto alt = detail::fbinom_of(row, k + m, m);
        if (lhs != mid || lhs != alt) {
          out.holds = false;
          out.failure = "(n, k, m) = (" + std::to_string(n) + ", " + std::to_string(k) +
                        ", " + std::to_string(m) + "): column side " + lhs.to_string() +
                        ", row side " + mid.to_string() + ", note form " +
                        alt.to_string();
          return out;
        }
      }
    }
  }
  return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  for (const auto &row : a)
    if (row.size() != n)
      throw std::invalid_argument("bareiss_determinant: matrix is not square");
  if (n == 0)
    return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < n && a[swap][p] == 0)
        ++swap;
      if (swap == n)
        return 0;
      std::swap(a[p], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i)
      for (std::size_t j = p + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[p][p];
  }
  return sign * a[n - 1][n - 1];
}

CheckResult check_determinant_identity(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (m < 1 || n < m || k < 1)
    throw std::invalid_argument("check_determinant_identity: requires n >= m >= 1, k >= 1");
  std::vector<std::vector<BigInt>> mat(static_cast<std::size_t>(k),
                                       std::vector<BigInt>(static_cast<std::size_t>(k)));
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < k; ++j)
      mpz_bin_uiui(mat[i][j].get_mpz_t(), static_cast<unsigned long>(n + i),
                   static_cast<unsigned long>(m + j));
  const BigInt det = bareiss_determinant(std::move(mat));
  const ExactRational rhs = fbinom(pascal_column(m), n - m + k, k);
  CheckResult out;
  out.cases = 1;
  if (ExactRational(det) != rhs) {
    out.holds = false;
    out.failure = "det = " + det.get_str() + " but [" + std::to_string(n - m + k) + " " +
                  std::to_string(k) + "]_C" + std::to_string(m) + " = " + rhs.to_string();
  }
  return out;
}

std::string to_string(RecurrenceOutcome o) {
  switch (o) {
  case RecurrenceOutcome::holds: return "holds";
  case RecurrenceOutcome::hypothesis_fails: return "hypothesis_fails";
  case RecurrenceOutcome::conclusion_fails: return "conclusion_fails";
  case RecurrenceOutcome::no_certificate: return "no_certificate";
  }
  return "unknown";
}

RecurrenceCheck check_recurrence_step(const Sequence &f, std::int64_t n, std::int64_t k,
                                      std::optional<BigInt> u, std::optional<BigInt> v) {
  if (k < 1 || k > n)
    throw std::invalid_argument("check_recurrence_step: requires 1 <= k <= n");
  if (u.has_value() != v.has_value())
    throw std::invalid_argument("check_recurrence_step: give both u and v or neither");
  const BigInt a = f.term(n - k + 1), b = f.term(k), c = f.term(n + 1);

  RecurrenceCheck out;
  if (!u) {
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t())) {
      out.outcome = RecurrenceOutcome::no_certificate;
      return out;
    }
    const BigInt scale = c / g;
    u = s * scale;
    v = t * scale;
  }
  out.u = *u;
  out.v = *v;
  if (c != out.u * a + out.v * b) {
    out.outcome = RecurrenceOutcome::hypothesis_fails;
    return out;
  }
  out.lhs = fbinom(f, n + 1, k);
  out.rhs = ExactRational(out.u) * fbinom(f, n, k) + ExactRational(out.v) * fbinom(f, n, k - 1);
  out.outcome = out.lhs == out.rhs ? RecurrenceOutcome::holds
                                   : RecurrenceOutcome::conclusion_fails;
  return out;
}

CheckResult check_hm_identity(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1 || k < 0 || k > n)
    throw std::invalid_argument("check_hm_identity: requires m >= 1, 0 <= k <= n");
  const Sequence h = h_m(m);
  BigInt mn_fact, m_fact, binom;
  mpz_fac_ui(mn_fact.get_mpz_t(), static_cast<unsigned long>(m * n));
  mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m * n),
               static_cast<unsigned long>(m * k));

  CheckResult out;
  out.cases = 2;
  const ExactRational fact_closed(mn_fact, ipow(m_fact, static_cast<unsigned long>(n)));
  if (ExactRational(ffactorial(h, n)) != fact_closed) {
    out.holds = false;
    out.failure = "<" + std::to_string(n) + ">_H" + std::to_string(m) +
                  " != (mn)!/(m!)^n";
  } else if (fbinom(h, n, k) != ExactRational(binom)) {
    out.holds = false;
    out.failure = "[" + std::to_string(n) + " " + std::to_string(k) + "]_H" +
                  std::to_string(m) + " != binom(mn, mk)";
  }
  return out;
}

CheckResult check_cyclotomic_product(std::int64_t n, const BigInt &a, const BigInt &b) {
  BigInt prod = 1;
  for (std::int64_t d : divisors(n))
    prod *= cyclotomic_eval(d, a, b);
  const BigInt expected = ipow(a, static_cast<unsigned long>(n)) -
                          ipow(b, static_cast<unsigned long>(n));
  CheckResult out;
  out.cases = 1;
  if (prod != expected) {
    out.holds = false;
    out.failure = "prod Phi_d(" + a.get_str() + ", " + b.get_str() + ") over d | " +
                  std::to_string(n) + " = " + prod.get_str() + ", expected " +
                  expected.get_str();
  }
  return out;
}

} // namespace binomid
