#include "binomid/sequence.hpp"

#include "binomid/errors.hpp"
#include "binomid/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace binomid {

struct Sequence::Impl {
  std::string name;
  std::optional<std::int64_t> length;
  Rule rule;
  mutable std::mutex mutex;
  mutable std::vector<BigInt> cache;
};

Sequence::Sequence(std::string name, std::optional<std::int64_t> length,
                   Rule rule)
    : impl_(std::make_shared<Impl>()) {
  if (length && *length < 0)
    throw std::invalid_argument("Sequence: negative length");
  impl_->name = std::move(name);
  impl_->length = length;
  impl_->rule = std::move(rule);
}

const std::string &Sequence::name() const { return impl_->name; }

std::optional<std::int64_t> Sequence::length() const { return impl_->length; }

bool Sequence::defined_at(std::int64_t n) const {
  return n >= 1 && (!impl_->length || n <= *impl_->length);
}

std::int64_t Sequence::available(std::int64_t wanted) const {
  return impl_->length ? std::min(wanted, *impl_->length) : wanted;
}

std::optional<BigInt> Sequence::try_term(std::int64_t n) const {
  if (n < 1)
    throw std::invalid_argument("Sequence " + name() +
                                ": indices start at 1, got " + std::to_string(n));
  if (!defined_at(n))
    return std::nullopt;
  std::lock_guard lock(impl_->mutex);
  auto &cache = impl_->cache;
  while (static_cast<std::int64_t>(cache.size()) < n) {
    const auto next = static_cast<std::int64_t>(cache.size()) + 1;
    BigInt value = impl_->rule(next, std::span<const BigInt>(cache));
    if (value == 0)
      throw zero_term(name(), next);
    cache.push_back(std::move(value));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

BigInt Sequence::term(std::int64_t n) const {
  auto v = try_term(n);
  if (!v)
    throw undefined_index("sequence " + name() + " is undefined at index " +
                              std::to_string(n),
                          n);
  return *std::move(v);
}

std::vector<BigInt> Sequence::prefix(std::int64_t count) const {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t n = 1; n <= count; ++n)
    out.push_back(term(n));
  return out;
}

namespace {

std::string join(const std::vector<BigInt> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ',';
    out += values[i].get_str();
  }
  return out;
}

std::optional<std::int64_t> min_length(const Sequence &f, const Sequence &g) {
  if (!f.length())
    return g.length();
  if (!g.length())
    return f.length();
  return std::min(*f.length(), *g.length());
}

std::optional<std::int64_t> scaled_length(const Sequence &f, std::int64_t mul,
                                          std::int64_t add) {
  if (!f.length())
    return std::nullopt;
  return *f.length() * mul + add;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

void require_nonnegative(std::int64_t m, const char *op) {
  if (m < 0)
    throw std::invalid_argument(std::string(op) + ": argument must be >= 0");
}

} // namespace

Sequence from_list(std::vector<BigInt> values, std::string name) {
  if (values.empty())
    throw std::invalid_argument("from_list: empty list");
  if (name.empty())
    name = "list:" + join(values);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == 0)
      throw zero_term(name, static_cast<std::int64_t>(i) + 1);
  const auto len = static_cast<std::int64_t>(values.size());
  return Sequence(std::move(name), len,
                  [values = std::move(values)](std::int64_t n,
                                               std::span<const BigInt>) -> BigInt {
                    return values[static_cast<std::size_t>(n - 1)];
                  });
}

Sequence from_rule(std::string name, std::function<BigInt(std::int64_t)> rule,
                   std::optional<std::int64_t> length) {
  return Sequence(std::move(name), length,
                  [rule = std::move(rule)](std::int64_t n,
                                           std::span<const BigInt>) -> BigInt {
                    return rule(n);
                  });
}

Sequence identity_seq() {
  return from_rule("I", [](std::int64_t n) -> BigInt { return BigInt(static_cast<long>(n)); });
}

Sequence const_seq(const BigInt &c) {
  if (c == 0)
    throw std::invalid_argument("const_seq: constant must be nonzero");
  return from_rule("const:" + c.get_str(), [c](std::int64_t) { return c; });
}

Sequence power_seq(const BigInt &c) {
  if (c == 0)
    throw std::invalid_argument("power_seq: base must be nonzero");
  return Sequence("cpow:" + c.get_str(), std::nullopt,
                  [c](std::int64_t n, std::span<const BigInt> prior) -> BigInt {
                    return n == 1 ? c : BigInt(prior.back() * c);
                  });
}

Sequence factorial_seq() {
  return Sequence("fact", std::nullopt,
                  [](std::int64_t n, std::span<const BigInt> prior) -> BigInt {
                    return n == 1 ? BigInt(1)
                                  : BigInt(prior.back() * static_cast<long>(n));
                  });
}

Sequence triangular_seq() {
  return from_rule("T", [](std::int64_t n) -> BigInt {
    return BigInt(static_cast<long>(n)) * static_cast<long>(n + 1) / 2;
  });
}

Sequence euler_phi_seq() {
  return from_rule("phi", [](std::int64_t n) -> BigInt {
    return BigInt(static_cast<long>(euler_phi(n)));
  });
}

Sequence pascal_column(std::int64_t m) {
  require_nonnegative(m, "pascal_column");
  return from_rule("pcol:" + std::to_string(m),
                   [m](std::int64_t n) -> BigInt { return binomial(n + m - 1, m); });
}

Sequence pascal_row(std::int64_t m) {
  require_nonnegative(m, "pascal_row");
  return from_rule("prow:" + std::to_string(m),
                   [m](std::int64_t n) -> BigInt { return binomial(m, n - 1); }, m + 1);
}

namespace {

Sequence g_ab_named(std::string name, const BigInt &a, const BigInt &b) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("g_ab: (a, b) must not both be zero");
  // G(n) = a G(n-1) + b^(n-1); equals n a^(n-1) when a = b.
  return Sequence(std::move(name), std::nullopt,
                  [a, b](std::int64_t n, std::span<const BigInt> prior) -> BigInt {
                    if (n == 1)
                      return BigInt(1);
                    return BigInt(a * prior.back() +
                                  ipow(b, static_cast<unsigned long>(n - 1)));
                  });
}

} // namespace

Sequence g_ab(const BigInt &a, const BigInt &b) {
  return g_ab_named("gab:" + a.get_str() + "," + b.get_str(), a, b);
}

Sequence g_q(const BigInt &q) { return g_ab_named("gq:" + q.get_str(), q, 1); }

namespace {

Sequence lucas_named(std::string name, const BigInt &p, const BigInt &q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("lucas: (P, Q) must not both be zero");
  return Sequence(std::move(name), std::nullopt,
                  [p, q](std::int64_t n, std::span<const BigInt> prior) -> BigInt {
                    if (n == 1)
                      return BigInt(1);
                    const BigInt &u1 = prior[static_cast<std::size_t>(n - 2)];
                    const BigInt u0 =
                        n >= 3 ? prior[static_cast<std::size_t>(n - 3)] : BigInt(0);
                    return BigInt(p * u1 - q * u0);
                  });
}

} // namespace

Sequence lucas(const BigInt &p, const BigInt &q) {
  return lucas_named("lucas:" + p.get_str() + "," + q.get_str(), p, q);
}

Sequence fibonacci() { return lucas_named("fib", 1, -1); }

Sequence h_m(std::int64_t m) {
  if (m < 1)
    throw std::invalid_argument("h_m: m must be >= 1");
  return from_rule("hm:" + std::to_string(m),
                   [m](std::int64_t n) -> BigInt { return binomial(m * n, m); });
}

Sequence divisor_product_of(const Sequence &g) {
  return Sequence("P(" + g.name() + ")", g.length(),
                  [g](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    BigInt acc = 1;
                    for (std::int64_t d : divisors(n))
                      acc *= g.term(d);
                    return acc;
                  });
}

Sequence product(const Sequence &f, const Sequence &g) {
  return Sequence("product(" + f.name() + "," + g.name() + ")",
                  min_length(f, g),
                  [f, g](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return BigInt(f.term(n) * g.term(n));
                  });
}

Sequence scalar(const BigInt &c, const Sequence &f) {
  if (c == 0)
    throw std::invalid_argument("scalar: multiplier must be nonzero");
  return Sequence("scalar(" + c.get_str() + "," + f.name() + ")", f.length(),
                  [c, f](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return BigInt(c * f.term(n));
                  });
}

Sequence prepend_one(const Sequence &f) {
  return Sequence("prepend1(" + f.name() + ")", scaled_length(f, 1, 1),
                  [f](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return n == 1 ? BigInt(1) : f.term(n - 1);
                  });
}

Sequence interleave_ones(const Sequence &f) {
  return Sequence("interleave1(" + f.name() + ")", scaled_length(f, 2, 0),
                  [f](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return n % 2 == 1 ? BigInt(1) : f.term(n / 2);
                  });
}

Sequence double_terms(const Sequence &f) {
  return Sequence("double(" + f.name() + ")", scaled_length(f, 2, 0),
                  [f](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return f.term((n + 1) / 2);
                  });
}

Sequence compose_power(unsigned e, const Sequence &f) {
  return Sequence("pow(" + std::to_string(e) + "," + f.name() + ")", f.length(),
                  [e, f](std::int64_t n, std::span<const BigInt>) -> BigInt {
                    return ipow(f.term(n), e);
                  });
}

} // namespace binomid
