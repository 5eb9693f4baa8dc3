#pragma once

#include "binomid/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace binomid {

// A 1-indexed stream of nonzero integers, finite or rule-generated.
//
// Terms are memoized. The rule for index n receives the already
// materialized terms 1..n-1, so recurrences can be written directly.
// Copies share the cache; a Sequence is immutable after construction and
// safe to query concurrently.
class Sequence {
public:
  using Rule = std::function<BigInt(std::int64_t n, std::span<const BigInt> prior)>;

  Sequence(std::string name, std::optional<std::int64_t> length, Rule rule);

  const std::string &name() const;
  std::optional<std::int64_t> length() const;
  bool is_finite() const { return length().has_value(); }
  bool defined_at(std::int64_t n) const;

  // Throws undefined_index past the end of a finite sequence and zero_term
  // if the rule yields 0.
  BigInt term(std::int64_t n) const;
  BigInt operator()(std::int64_t n) const { return term(n); }

  // nullopt when undefined; arithmetic errors still throw.
  std::optional<BigInt> try_term(std::int64_t n) const;

  // Terms 1..count. Throws undefined_index if count exceeds the length.
  std::vector<BigInt> prefix(std::int64_t count) const;

  // Number of terms available in 1..wanted (wanted, or the finite length).
  std::int64_t available(std::int64_t wanted) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Constructors. Names are the canonical sequence-spec strings.
Sequence from_list(std::vector<BigInt> values, std::string name = {});
Sequence from_rule(std::string name, std::function<BigInt(std::int64_t)> rule,
                   std::optional<std::int64_t> length = std::nullopt);

Sequence identity_seq();
Sequence const_seq(const BigInt &c);
Sequence power_seq(const BigInt &c);
Sequence factorial_seq();
Sequence triangular_seq();
Sequence euler_phi_seq();
Sequence pascal_column(std::int64_t m);
Sequence pascal_row(std::int64_t m);
Sequence g_ab(const BigInt &a, const BigInt &b);
Sequence g_q(const BigInt &q);
Sequence lucas(const BigInt &p, const BigInt &q);
Sequence fibonacci();
Sequence h_m(std::int64_t m);

// n -> prod_{d | n} g(d)
Sequence divisor_product_of(const Sequence &g);

Sequence product(const Sequence &f, const Sequence &g);
Sequence scalar(const BigInt &c, const Sequence &f);
// (1, f1, f2, ...)
Sequence prepend_one(const Sequence &f);
// (1, f1, 1, f2, 1, f3, ...)
Sequence interleave_ones(const Sequence &f);
// (f1, f1, f2, f2, ...)
Sequence double_terms(const Sequence &f);
// n -> f(n)^e, the homomorphic map x -> x^e applied pointwise.
Sequence compose_power(unsigned e, const Sequence &f);

} // namespace binomid
