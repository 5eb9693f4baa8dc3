#include "binomid/classify.hpp"

#include "binomid/core.hpp"
#include "binomid/errors.hpp"
#include "binomid/kernels.hpp"
#include "binomid/numtheory.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>

namespace binomid {

std::string to_string(Property p) {
  switch (p) {
  case Property::binomid: return "binomid";
  case Property::binomid_at_level: return "binomid_at_level";
  case Property::binomid_every_level: return "binomid_every_level";
  case Property::divisor_chain: return "divisor_chain";
  case Property::divisible: return "divisible";
  case Property::gcd_sequence: return "gcd_sequence";
  case Property::dual_gcd: return "dual_gcd";
  case Property::divisor_product: return "divisor_product";
  case Property::multiplicative: return "multiplicative";
  case Property::homomorphic: return "homomorphic";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  return v == Verdict::holds_to_bound ? "holds_to_bound" : "fails";
}

std::optional<std::int64_t> Witness::index(const std::string &name) const {
  for (const auto &[key, value] : indices)
    if (key == name)
      return value;
  return std::nullopt;
}

std::string ClassificationReport::label() const {
  std::string out = to_string(property);
  if (level)
    out += "(" + std::to_string(*level) + ")";
  return out;
}

namespace {

std::string bracket(std::int64_t n, std::int64_t k) {
  return "[" + std::to_string(n) + " " + std::to_string(k) + "]";
}

void require_bound(std::int64_t bound) {
  if (bound < 1)
    throw std::invalid_argument("classifier bound must be >= 1, got " +
                                std::to_string(bound));
}

ClassificationReport start(Property p, const Sequence &f, std::int64_t bound) {
  require_bound(bound);
  ClassificationReport r;
  r.property = p;
  r.requested_bound = bound;
  r.bound = f.available(bound);
  if (r.bound < bound)
    r.notes.push_back("bound reduced from " + std::to_string(bound) + " to " +
                      std::to_string(r.bound) + ": " + f.name() + " has " +
                      std::to_string(r.bound) + " terms");
  return r;
}

ClassificationReport fail(ClassificationReport r, Witness w) {
  r.verdict = Verdict::fails;
  r.witness = std::move(w);
  return r;
}

BigInt gcd_abs(const BigInt &a, const BigInt &b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const BigInt &d, const BigInt &n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// terms[n] for n = 1..count; index 0 unused.
std::vector<BigInt> one_based(const Sequence &f, std::int64_t count) {
  std::vector<BigInt> t{BigInt(0)};
  const auto p = f.prefix(count);
  t.insert(t.end(), p.begin(), p.end());
  return t;
}

} // namespace

ClassificationReport is_binomid(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::binomid, f, bound);
  const auto terms = f.prefix(r.bound);
  const auto fact = kernels::factorials(terms);
  auto violation = kernels::boxed_scan_parallel(fact, r.bound);

  const auto rows = kernels::triangle_rows_parallel(fact, r.bound);
  bool integral = true;
  for (const auto &row : rows)
    integral = integral && std::all_of(row.begin(), row.end(),
                                       [](const auto &e) { return e.is_integer(); });
  if (integral != !violation)
    throw internal_error("is_binomid: boxed criterion and triangle integrality "
                         "disagree for " + f.name());

  if (!violation)
    return r;
  const auto [k, m, q] = *violation;
  return fail(std::move(r),
              Witness{{{"k", k}, {"m", m}, {"n", m + k}},
                      q,
                      "f_1..f_" + std::to_string(k) + " does not divide f_" +
                          std::to_string(m + 1) + "..f_" + std::to_string(m + k) +
                          ": " + bracket(m + k, k) + " = " + q.to_string()});
}

ClassificationReport is_binomid_at_level(const Sequence &f, std::int64_t c,
                                         std::int64_t bound) {
  require_bound(bound);
  if (c < 0)
    throw std::invalid_argument("is_binomid_at_level: level must be >= 0");
  const Sequence column = detail::column_of(f, c);

  ClassificationReport r;
  r.property = Property::binomid_at_level;
  r.level = c;
  r.requested_bound = bound;
  if (f.term(1) != 1)
    r.notes.push_back("f_1 = " + f.term(1).get_str() +
                      "; columns taken from Delta(f) = Delta(f / f_1)");

  const std::int64_t avail = column.available(bound);
  for (std::int64_t n = 1; n <= avail; ++n) {
    try {
      column.term(n);
    } catch (const non_integral_entry &e) {
      r.bound = avail;
      mpq_class value(e.value());
      value.canonicalize();
      return fail(std::move(r),
                  Witness{{{"level", c}, {"N", n}, {"n", e.n()}, {"k", e.k()}},
                          ExactRational(value),
                          "level " + std::to_string(c) + ", column entry " +
                              bracket(e.n(), e.k()) + " = " + e.value() +
                              " is not an integer"});
    }
  }
  auto inner = is_binomid(column, bound);
  r.bound = inner.bound;
  r.notes.insert(r.notes.end(), inner.notes.begin(), inner.notes.end());
  if (inner.holds())
    return r;
  Witness w = *inner.witness;
  const auto n = *w.index("n"), k = *w.index("k");
  w.indices.insert(w.indices.begin(), {"level", c});
  w.description = "level " + std::to_string(c) + ", " + bracket(n, k) + " = " +
                  w.value->to_string();
  return fail(std::move(r), std::move(w));
}

namespace {

// Entries [n k]_(R_(n+c-1)) for c <= depth, n <= bound: the row-side copy
// of the column scan. Returns whether every entry is an integer, per level.
std::vector<bool> mirrored_rows_integral(const Sequence &f, std::int64_t depth,
                                         std::vector<std::int64_t> bounds) {
  std::int64_t top = 0;
  for (std::int64_t c = 0; c <= depth; ++c)
    top = std::max(top, bounds[static_cast<std::size_t>(c)] + c - 1);
  const auto fact = kernels::factorials(f.prefix(top));
  const auto delta = kernels::triangle_rows_serial(fact, top);

  // ok[c] cleared by any row r holding a non-integral entry of level c.
  std::vector<std::vector<char>> bad(static_cast<std::size_t>(top) + 1,
                                     std::vector<char>(static_cast<std::size_t>(depth) + 1, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r = 0; r <= top; ++r) {
    const auto &row = delta[static_cast<std::size_t>(r)]; // R_r, r + 1 terms
    std::int64_t need = 0;
    for (std::int64_t c = 0; c <= depth; ++c) {
      const std::int64_t n = r - c + 1;
      if (n >= 1 && n <= bounds[static_cast<std::size_t>(c)])
        need = std::max(need, n);
    }
    if (need == 0)
      continue;
    const auto tri = kernels::rational_triangle_rows(row, need);
    for (std::int64_t c = 0; c <= depth; ++c) {
      const std::int64_t n = r - c + 1;
      if (n < 1 || n > bounds[static_cast<std::size_t>(c)])
        continue;
      const auto &entries = tri[static_cast<std::size_t>(n)];
      if (!std::all_of(entries.begin(), entries.end(),
                       [](const auto &e) { return e.is_integer(); }))
        bad[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
    }
  }
  std::vector<bool> ok(static_cast<std::size_t>(depth) + 1, true);
  for (const auto &row : bad)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c])
        ok[c] = false;
  return ok;
}

} // namespace

ClassificationReport is_binomid_every_level(const Sequence &f, std::int64_t depth,
                                            std::int64_t bound) {
  require_bound(bound);
  if (depth < 0)
    throw std::invalid_argument("is_binomid_every_level: depth must be >= 0");

  ClassificationReport r;
  r.property = Property::binomid_every_level;
  r.level = depth;
  r.requested_bound = bound;
  r.bound = bound;

  std::vector<ClassificationReport> levels;
  std::vector<std::int64_t> bounds;
  for (std::int64_t c = 0; c <= depth; ++c) {
    levels.push_back(is_binomid_at_level(f, c, bound));
    bounds.push_back(levels.back().bound);
    r.bound = std::min(r.bound, levels.back().bound);
  }

  // Column c to bound B and rows R_(n+c-1), n <= B, carry the same entries.
  const auto mirror = mirrored_rows_integral(f, depth, bounds);
  for (std::int64_t c = 0; c <= depth; ++c) {
    const auto &lv = levels[static_cast<std::size_t>(c)];
    const bool column_ok = lv.holds();
    if (column_ok != mirror[static_cast<std::size_t>(c)])
      throw internal_error("is_binomid_every_level: rows and columns disagree at "
                           "level " + std::to_string(c) + " for " + f.name());
  }

  for (const auto &lv : levels)
    if (!lv.holds()) {
      r.notes.push_back("first failing level: " + std::to_string(*lv.level));
      return fail(std::move(r), *lv.witness);
    }

  // Slices Delta(R_m), m <= depth.
  if (f.available(depth) < depth) {
    r.notes.push_back("pyramid skipped: " + f.name() + " is shorter than depth");
    return r;
  }
  std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> bad;
  std::optional<ExactRational> bad_value;
  if (f.term(1) == 1) {
    try {
      const Pyramid p = pyramid(f, depth);
      bad = p.first_non_integral();
      if (bad)
        bad_value = p.slice(std::get<0>(*bad)).entry(std::get<1>(*bad), std::get<2>(*bad));
    } catch (const non_integral_entry &e) {
      bad = std::tuple{e.n(), std::int64_t{1}, e.k() + 1};
      r.notes.push_back("row " + std::to_string(e.n()) + " of Delta(f) is not integral");
    }
  } else {
    for (std::int64_t m = 0; m <= depth && !bad; ++m) {
      const auto row = detail::row_values(f, m);
      const auto slice = kernels::rational_triangle_rows(row, m);
      for (std::int64_t n = 0; n <= m && !bad; ++n)
        for (std::int64_t k = 0; k <= n && !bad; ++k)
          if (!slice[n][k].is_integer()) {
            bad = std::tuple{m, n, k};
            bad_value = slice[n][k];
          }
    }
  }
  if (!bad)
    return r;
  const auto [m, n, k] = *bad;
  return fail(std::move(r),
              Witness{{{"slice", m}, {"n", n}, {"k", k}},
                      bad_value,
                      "pyramid slice " + std::to_string(m) + ", " + bracket(n, k) +
                          (bad_value ? " = " + bad_value->to_string() : "") +
                          " is not an integer"});
}

std::vector<ExactRational> mobius_invert(const Sequence &f, std::int64_t count) {
  if (count < 0)
    throw std::invalid_argument("mobius_invert: count must be >= 0");
  const auto t = one_based(f, count);
  std::vector<ExactRational> g;
  g.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) {
    BigInt num = 1, den = 1;
    for (std::int64_t d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu == 1)
        num *= t[static_cast<std::size_t>(d)];
      else if (mu == -1)
        den *= t[static_cast<std::size_t>(d)];
    }
    g.emplace_back(num, den);
  }
  return g;
}

ClassificationReport is_divisor_product(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::divisor_product, f, bound);
  const auto g = mobius_invert(f, r.bound);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!g[i].is_integer()) {
      const auto n = static_cast<std::int64_t>(i) + 1;
      return fail(std::move(r), Witness{{{"n", n}},
                                        g[i],
                                        "g(" + std::to_string(n) + ") = " +
                                            g[i].to_string() + " is not an integer"});
    }
  return r;
}

ClassificationReport is_divisor_chain(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::divisor_chain, f, bound);
  const auto t = one_based(f, r.bound);
  for (std::int64_t n = 1; n < r.bound; ++n)
    if (!divides(t[n], t[n + 1]))
      return fail(std::move(r),
                  Witness{{{"n", n}},
                          ExactRational(t[n + 1], t[n]),
                          "f_" + std::to_string(n) + " = " + t[n].get_str() +
                              " does not divide f_" + std::to_string(n + 1) + " = " +
                              t[n + 1].get_str()});
  return r;
}

ClassificationReport is_divisible(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::divisible, f, bound);
  const auto t = one_based(f, r.bound);
  for (std::int64_t k = 1; k <= r.bound; ++k)
    for (std::int64_t n = 2 * k; n <= r.bound; n += k)
      if (!divides(t[k], t[n]))
        return fail(std::move(r),
                    Witness{{{"k", k}, {"n", n}},
                            ExactRational(t[n], t[k]),
                            "f(" + std::to_string(k) + ") = " + t[k].get_str() +
                                " does not divide f(" + std::to_string(n) +
                                ") = " + t[n].get_str()});
  return r;
}

ClassificationReport is_gcd_sequence(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::gcd_sequence, f, bound);
  const auto t = one_based(f, r.bound);
  for (std::int64_t m = 1; m <= r.bound; ++m)
    for (std::int64_t n = m; n <= r.bound; ++n) {
      const std::int64_t d = std::gcd(m, n);
      const BigInt g = gcd_abs(t[m], t[n]);
      if (g != abs(t[d]))
        return fail(std::move(r),
                    Witness{{{"m", m}, {"n", n}},
                            ExactRational(g),
                            "gcd(f(" + std::to_string(m) + "), f(" + std::to_string(n) +
                                ")) = " + g.get_str() + " but f(" + std::to_string(d) +
                                ") = " + t[d].get_str()});
    }
  return r;
}

ClassificationReport is_dual_gcd(const Sequence &f, std::int64_t bound) {
  auto r = start(Property::dual_gcd, f, bound);
  const auto t = one_based(f, r.bound);
  for (std::int64_t m = 1; 2 * m <= r.bound; ++m)
    for (std::int64_t n = m; m + n <= r.bound; ++n) {
      const BigInt g = gcd_abs(t[m], t[n]);
      if (!divides(g, t[m + n]))
        return fail(std::move(r),
                    Witness{{{"m", m}, {"n", n}},
                            ExactRational(t[m + n], g),
                            "gcd(f(" + std::to_string(m) + "), f(" + std::to_string(n) +
                                ")) = " + g.get_str() + " does not divide f(" +
                                std::to_string(m + n) + ") = " + t[m + n].get_str()});
    }
  return r;
}

namespace {

ClassificationReport multiplicative_scan(Property p, const Sequence &f,
                                         std::int64_t bound, bool coprime_only) {
  auto r = start(p, f, bound);
  const auto t = one_based(f, r.bound);
  for (std::int64_t a = 1; a * a <= r.bound; ++a)
    for (std::int64_t b = a; a * b <= r.bound; ++b) {
      if (coprime_only && std::gcd(a, b) != 1)
        continue;
      const BigInt rhs = t[a] * t[b];
      if (t[a * b] != rhs)
        return fail(std::move(r),
                    Witness{{{"a", a}, {"b", b}},
                            ExactRational(t[a * b], rhs),
                            "f(" + std::to_string(a * b) + ") = " + t[a * b].get_str() +
                                " but f(" + std::to_string(a) + ") f(" +
                                std::to_string(b) + ") = " + rhs.get_str()});
    }
  return r;
}

} // namespace

ClassificationReport is_multiplicative(const Sequence &f, std::int64_t bound) {
  return multiplicative_scan(Property::multiplicative, f, bound, true);
}

ClassificationReport is_homomorphic(const Sequence &f, std::int64_t bound) {
  return multiplicative_scan(Property::homomorphic, f, bound, false);
}

ClassificationReport additive_binomid_check(std::int64_t c,
                                            std::span<const std::int64_t> b,
                                            std::int64_t bound) {
  require_bound(bound);
  if (c < 2)
    throw std::invalid_argument("additive_binomid_check: c must be > 1");
  ClassificationReport r;
  r.property = Property::binomid;
  r.requested_bound = bound;
  r.bound = std::min<std::int64_t>(bound, static_cast<std::int64_t>(b.size()));
  if (r.bound < bound)
    r.notes.push_back("bound reduced to the exponent list length " +
                      std::to_string(r.bound));

  std::vector<std::int64_t> s{0};
  for (std::int64_t i = 0; i < r.bound; ++i)
    s.push_back(s.back() + b[static_cast<std::size_t>(i)]);

  std::optional<Witness> witness;
  for (std::int64_t k = 1; k < r.bound && !witness; ++k)
    for (std::int64_t m = 1; m + k <= r.bound; ++m) {
      const std::int64_t excess = s[m + k] - s[m] - s[k];
      if (excess >= 0)
        continue;
      const BigInt power = ipow(BigInt(static_cast<long>(c)),
                                static_cast<unsigned long>(-excess));
      witness = Witness{{{"k", k}, {"m", m}, {"n", m + k}},
                        ExactRational(BigInt(1), power),
                        "s(" + std::to_string(m) + ") + s(" + std::to_string(k) +
                            ") > s(" + std::to_string(m + k) + ")"};
      break;
    }

  if (std::all_of(b.begin(), b.begin() + r.bound, [](auto e) { return e >= 0; }) &&
      r.bound >= 1) {
    std::vector<BigInt> powers;
    for (std::int64_t i = 0; i < r.bound; ++i)
      powers.push_back(ipow(BigInt(static_cast<long>(c)),
                            static_cast<unsigned long>(b[static_cast<std::size_t>(i)])));
    const auto direct = is_binomid(from_list(std::move(powers)), r.bound);
    const bool same = direct.holds() == !witness &&
                      (!witness || (direct.witness->index("k") == witness->index("k") &&
                                    direct.witness->index("m") == witness->index("m")));
    if (!same)
      throw internal_error("additive_binomid_check: disagrees with is_binomid");
  }
  if (witness)
    return fail(std::move(r), std::move(*witness));
  return r;
}

PerPrimeDecomposition per_prime_decomposition(const Sequence &f, std::int64_t bound,
                                              std::int64_t prime_bound) {
  require_bound(bound);
  const std::int64_t eff = f.available(bound);
  const auto terms = f.prefix(eff);

  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= prime_bound; ++p)
    if (is_prime(p))
      primes.push_back(p);

  PerPrimeDecomposition out;
  std::vector<std::vector<unsigned>> exps(primes.size(),
                                          std::vector<unsigned>(terms.size(), 0));
  std::vector<bool> used(primes.size(), false);
  for (std::size_t n = 0; n < terms.size(); ++n) {
    BigInt rest = abs(terms[n]);
    for (std::size_t i = 0; i < primes.size() && rest > 1; ++i) {
      const unsigned e = valuation(primes[i], rest);
      if (e == 0)
        continue;
      exps[i][n] = e;
      used[i] = true;
      BigInt pe = ipow(BigInt(static_cast<long>(primes[i])), e);
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), pe.get_mpz_t());
    }
    if (rest > 1)
      out.undecided.push_back("term " + std::to_string(n + 1) + " has cofactor " +
                              rest.get_str() + " with prime factors above " +
                              std::to_string(prime_bound));
  }

  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!used[i])
      continue;
    std::vector<BigInt> part;
    for (unsigned e : exps[i])
      part.push_back(ipow(BigInt(static_cast<long>(primes[i])), e));
    auto rep = is_binomid(from_list(std::move(part),
                                    "p-part(" + std::to_string(primes[i]) + "," +
                                        f.name() + ")"),
                          eff);
    out.conjunction_holds = out.conjunction_holds && rep.holds();
    out.reports.emplace_back(primes[i], std::move(rep));
  }

  if (out.undecided.empty()) {
    const bool direct = is_binomid(f, eff).holds();
    if (direct != out.conjunction_holds)
      throw internal_error("per_prime_decomposition: conjunction disagrees with "
                           "is_binomid for " + f.name());
    out.agrees_with_binomid = true;
  }
  return out;
}

DivisorProductProfile divisor_product_profile(const Sequence &f, std::int64_t bound) {
  require_bound(bound);
  DivisorProductProfile out;
  out.bound = f.available(bound);
  if (f.term(1) != 1) {
    out.precondition_note = "f(1) = " + f.term(1).get_str() + ", expected 1";
    return out;
  }
  const auto dp = is_divisor_product(f, out.bound);
  if (!dp.holds()) {
    out.precondition_note = "not a divisor-product: " + dp.witness->description;
    return out;
  }
  out.precondition_ok = true;

  const auto gq = mobius_invert(f, out.bound);
  std::vector<BigInt> g{BigInt(0)};
  for (const auto &v : gq)
    g.push_back(v.numerator());

  bool crit1 = true, crit2 = true, crit3 = true;
  for (std::int64_t n = 2; n <= out.bound; ++n) {
    const std::int64_t p = prime_power_base(n);
    if (p == 0) {
      crit1 = crit1 && g[n] == 1;
    } else if (n != p) {
      crit2 = crit2 && g[n] == g[p];
    }
  }
  crit2 = crit2 && crit1;
  for (std::int64_t m = 2; m <= out.bound && crit3; ++m)
    for (std::int64_t n = m + 1; n <= out.bound; ++n)
      if (n % m != 0 && gcd_abs(g[m], g[n]) != 1) {
        crit3 = false;
        break;
      }

  out.multiplicative = {crit1, is_multiplicative(f, out.bound).holds()};
  out.homomorphic = {crit2, is_homomorphic(f, out.bound).holds()};
  out.gcd = {crit3, is_gcd_sequence(f, out.bound).holds()};
  return out;
}

} // namespace binomid
