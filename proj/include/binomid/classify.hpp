#pragma once

#include "binomid/rational.hpp"
#include "binomid/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace binomid {

enum class Property {
  binomid,
  binomid_at_level,
  binomid_every_level,
  divisor_chain,
  divisible,
  gcd_sequence,
  dual_gcd,
  divisor_product,
  multiplicative,
  homomorphic,
};

enum class Verdict { holds_to_bound, fails };

std::string to_string(Property p);
std::string to_string(Verdict v);

// A concrete counterexample. `indices` are named in the order they were
// searched (outer first); `value` is the offending exact value when there
// is one.
struct Witness {
  std::vector<std::pair<std::string, std::int64_t>> indices;
  std::optional<ExactRational> value;
  std::string description;

  std::optional<std::int64_t> index(const std::string &name) const;
};

// Reports never claim unbounded truth: `holds_to_bound` means every case up
// to `bound` was checked.
struct ClassificationReport {
  Property property = Property::binomid;
  std::optional<std::int64_t> level; // binomid_at_level / every_level depth
  std::int64_t bound = 0;            // effective bound actually checked
  std::int64_t requested_bound = 0;
  Verdict verdict = Verdict::holds_to_bound;
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  bool holds() const { return verdict == Verdict::holds_to_bound; }
  std::string label() const; // e.g. "binomid_at_level(2)"
};

// f_1...f_k | f_(m+1)...f_(m+k) for all m, k >= 1 with m + k <= bound.
// Cross-checked against triangle integrality to the same depth.
// Witness: k-major first violation, indices (k, m, n = m + k) and [n k]_f.
ClassificationReport is_binomid(const Sequence &f, std::int64_t bound);

// Column c of Delta(f) is binomid to `bound`.
ClassificationReport is_binomid_at_level(const Sequence &f, std::int64_t c,
                                         std::int64_t bound);

// Every column c <= depth binomid to `bound`, and pyramid(f, depth) is
// integral. The column scan is mirrored on the row triangles that hold the
// same entries; a disagreement raises internal_error.
ClassificationReport is_binomid_every_level(const Sequence &f, std::int64_t depth,
                                            std::int64_t bound);

// The unique g with f = P(g) on 1..count, by multiplicative Moebius
// inversion.
std::vector<ExactRational> mobius_invert(const Sequence &f, std::int64_t count);

ClassificationReport is_divisor_product(const Sequence &f, std::int64_t bound);
ClassificationReport is_divisor_chain(const Sequence &f, std::int64_t bound);
ClassificationReport is_divisible(const Sequence &f, std::int64_t bound);
ClassificationReport is_gcd_sequence(const Sequence &f, std::int64_t bound);
ClassificationReport is_dual_gcd(const Sequence &f, std::int64_t bound);
ClassificationReport is_multiplicative(const Sequence &f, std::int64_t bound);
ClassificationReport is_homomorphic(const Sequence &f, std::int64_t bound);

// s_b(m) + s_b(n) <= s_b(m + n) for m + n <= bound, s_b the partial sums of
// the exponent list b. When every b_n >= 0 the verdict is cross-checked
// against is_binomid on (c^b_n).
ClassificationReport additive_binomid_check(std::int64_t c,
                                            std::span<const std::int64_t> b,
                                            std::int64_t bound);

struct PerPrimeDecomposition {
  std::vector<std::pair<std::int64_t, ClassificationReport>> reports;
  // Terms whose cofactor after trial division by primes <= prime_bound
  // exceeds 1; the conjunction is undecided for them.
  std::vector<std::string> undecided;
  bool conjunction_holds = true;
  // Set when `undecided` is empty: the conjunction matched is_binomid.
  std::optional<bool> agrees_with_binomid;
};

PerPrimeDecomposition per_prime_decomposition(const Sequence &f, std::int64_t bound,
                                              std::int64_t prime_bound);

struct ProfileCriterion {
  bool criterion = false; // evaluated on g = mobius_invert(f)
  bool direct = false;    // the matching classifier evaluated on f
  bool agrees() const { return criterion == direct; }
};

struct DivisorProductProfile {
  std::int64_t bound = 0;
  bool precondition_ok = false;
  std::string precondition_note;
  ProfileCriterion multiplicative; // g = 1 off prime powers
  ProfileCriterion homomorphic;    // ... and g(p^m) = g(p)
  ProfileCriterion gcd;            // g(m), g(n) coprime when m, n incomparable
};

DivisorProductProfile divisor_product_profile(const Sequence &f, std::int64_t bound);

} // namespace binomid
