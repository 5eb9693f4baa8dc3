#include "binomid/core.hpp"

#include "binomid/errors.hpp"
#include "binomid/kernels.hpp"

#include <exception>
#include <stdexcept>
#include <string>

namespace binomid {

namespace {

std::string entry_label(std::int64_t n, std::int64_t k) {
  return "[" + std::to_string(n) + " " + std::to_string(k) + "]";
}

void require_unit_first(const Sequence &f, const char *op) {
  if (f.term(1) != 1)
    throw std::invalid_argument(std::string(op) + ": requires f_1 = 1, got " +
                                f.term(1).get_str() + " for " + f.name());
}

// f_n f_(n-1) ... f_(n-k+1)
BigInt falling_product(const Sequence &f, std::int64_t n, std::int64_t k) {
  BigInt acc = 1;
  for (std::int64_t i = n - k + 1; i <= n; ++i)
    acc *= f.term(i);
  return acc;
}

void check_indices(const Sequence &f, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    throw undefined_index(entry_label(n, k) + " is undefined for " + f.name(),
                          k > n ? k : std::min(n, k));
  if (!f.defined_at(n) && n > 0)
    throw undefined_index(entry_label(n, k) + " is undefined: " + f.name() +
                              " has no term " + std::to_string(n),
                          n);
}

std::vector<BigInt> source_factorials(const Sequence &f, std::int64_t depth) {
  if (depth < 0)
    throw std::invalid_argument("triangle: depth must be >= 0");
  if (!f.defined_at(depth) && depth > 0)
    throw undefined_index("triangle: " + f.name() + " has no term " +
                              std::to_string(depth),
                          depth);
  const auto terms = f.prefix(depth);
  return kernels::factorials(terms);
}

} // namespace

BigInt ffactorial(const Sequence &f, std::int64_t n) {
  if (n < 0)
    throw undefined_index("<" + std::to_string(n) + "> is undefined", n);
  return falling_product(f, n, n);
}

ExactRational fbinom(const Sequence &f, std::int64_t n, std::int64_t k) {
  check_indices(f, n, k);
  k = std::min(k, n - k);
  return ExactRational(falling_product(f, n, k), falling_product(f, k, k));
}

Triangle::Triangle(Sequence source, std::int64_t depth,
                   std::vector<std::vector<ExactRational>> rows)
    : source_(std::move(source)), depth_(depth), rows_(std::move(rows)) {
  if (static_cast<std::int64_t>(rows_.size()) != depth_ + 1)
    throw std::invalid_argument("Triangle: row count does not match depth");
}

const ExactRational &Triangle::entry(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n || n > depth_)
    throw undefined_index(entry_label(n, k) + " is outside the triangle of " +
                              source_.name(),
                          n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::span<const ExactRational> Triangle::row(std::int64_t n) const {
  if (n < 0 || n > depth_)
    throw undefined_index("row " + std::to_string(n) + " is outside the triangle",
                          n);
  return rows_[static_cast<std::size_t>(n)];
}

std::optional<std::pair<std::int64_t, std::int64_t>>
Triangle::first_non_integral() const {
  for (std::size_t n = 0; n < rows_.size(); ++n)
    for (std::size_t k = 0; k < rows_[n].size(); ++k)
      if (!rows_[n][k].is_integer())
        return std::pair{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)};
  return std::nullopt;
}

Triangle triangle(const Sequence &f, std::int64_t depth) {
  const auto fact = source_factorials(f, depth);
  return Triangle(f, depth, kernels::triangle_rows_parallel(fact, depth));
}

Triangle triangle_serial(const Sequence &f, std::int64_t depth) {
  const auto fact = source_factorials(f, depth);
  return Triangle(f, depth, kernels::triangle_rows_serial(fact, depth));
}

namespace detail {

std::vector<ExactRational> row_values(const Sequence &f, std::int64_t m) {
  if (m < 0)
    throw std::invalid_argument("row: m must be >= 0");
  const auto fact = source_factorials(f, m);
  auto rows = kernels::triangle_rows_serial(fact, m);
  return std::move(rows.back());
}

Sequence column_of(const Sequence &f, std::int64_t j) {
  if (j < 0)
    throw std::invalid_argument("column: j must be >= 0");
  std::optional<std::int64_t> length;
  if (f.length())
    length = std::max<std::int64_t>(*f.length() - j + 1, 0);
  const BigInt base = ffactorial(f, j);
  const std::string name = "col(" + std::to_string(j) + "," + f.name() + ")";
  return Sequence(name, length,
                  [f, j, base, name](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    const ExactRational value(falling_product(f, n + j - 1, j), base);
                    if (!value.is_integer())
                      throw non_integral_entry(
                          name + ": entry " + entry_label(n + j - 1, j) + " = " +
                              value.to_string() + " is not an integer",
                          n + j - 1, j, value.to_string());
                    return value.numerator();
                  });
}

ExactRational fbinom_of(std::span<const ExactRational> terms, std::int64_t n,
                        std::int64_t k) {
  if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) > terms.size())
    throw undefined_index(entry_label(n, k) + " is undefined", n);
  ExactRational num(1), den(1);
  for (std::int64_t i = 0; i < k; ++i) {
    num *= terms[static_cast<std::size_t>(n - 1 - i)];
    den *= terms[static_cast<std::size_t>(k - 1 - i)];
  }
  return num / den;
}

} // namespace detail

Sequence row_seq(const Sequence &f, std::int64_t m) {
  require_unit_first(f, "row_seq");
  const auto values = detail::row_values(f, m);
  std::vector<BigInt> terms;
  terms.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_integer())
      throw non_integral_entry("row " + std::to_string(m) + " of " + f.name() +
                                   ": entry " +
                                   entry_label(m, static_cast<std::int64_t>(k)) +
                                   " = " + values[k].to_string() +
                                   " is not an integer",
                               m, static_cast<std::int64_t>(k),
                               values[k].to_string());
    terms.push_back(values[k].numerator());
  }
  return from_list(std::move(terms),
                   "row(" + std::to_string(m) + "," + f.name() + ")");
}

Sequence col_seq(const Sequence &f, std::int64_t j) {
  require_unit_first(f, "col_seq");
  return detail::column_of(f, j);
}

Pyramid::Pyramid(Sequence source, std::int64_t depth, std::vector<Triangle> slices)
    : source_(std::move(source)), depth_(depth), slices_(std::move(slices)) {
  if (static_cast<std::int64_t>(slices_.size()) != depth_ + 1)
    throw std::invalid_argument("Pyramid: slice count does not match depth");
}

const Triangle &Pyramid::slice(std::int64_t m) const {
  if (m < 0 || m > depth_)
    throw undefined_index("slice " + std::to_string(m) + " is outside the pyramid",
                          m);
  return slices_[static_cast<std::size_t>(m)];
}

std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>>
Pyramid::first_non_integral() const {
  for (std::size_t m = 0; m < slices_.size(); ++m)
    if (auto nk = slices_[m].first_non_integral())
      return std::tuple{static_cast<std::int64_t>(m), nk->first, nk->second};
  return std::nullopt;
}

Pyramid pyramid(const Sequence &f, std::int64_t depth) {
  if (depth < 0)
    throw std::invalid_argument("pyramid: depth must be >= 0");
  require_unit_first(f, "pyramid");
  f.prefix(f.available(depth));

  std::vector<std::optional<Triangle>> built(static_cast<std::size_t>(depth) + 1);
  std::vector<std::exception_ptr> errors(built.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t m = depth; m >= 0; --m) {
    try {
      const Sequence row = row_seq(f, m);
      built[static_cast<std::size_t>(m)] =
          Triangle(row, m, kernels::triangle_rows_serial(
                               kernels::factorials(row.prefix(m)), m));
    } catch (...) {
      errors[static_cast<std::size_t>(m)] = std::current_exception();
    }
  }
  // Report the lowest failing slice so errors are deterministic.
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  std::vector<Triangle> slices;
  slices.reserve(built.size());
  for (auto &t : built)
    slices.push_back(std::move(*t));
  return Pyramid(f, depth, std::move(slices));
}

} // namespace binomid
