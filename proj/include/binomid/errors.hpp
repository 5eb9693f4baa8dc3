#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binomid {

// Base for every error raised while materializing or combining sequences.
class sequence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A finite sequence (or coefficient) was queried outside its domain.
// This is the "undefined" outcome, not an arithmetic failure.
class undefined_index : public sequence_error {
public:
  undefined_index(const std::string &what, std::int64_t index)
      : sequence_error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

private:
  std::int64_t index_;
};

// A term rule produced zero. Sequence terms are nonzero by construction.
class zero_term : public sequence_error {
public:
  zero_term(const std::string &name, std::int64_t index)
      : sequence_error("sequence " + name + " has a zero term at index " +
                       std::to_string(index)),
        index_(index) {}
  std::int64_t index() const noexcept { return index_; }

private:
  std::int64_t index_;
};

// A row or column of a triangle was requested as an integer sequence but
// one of its entries is not an integer.
class non_integral_entry : public sequence_error {
public:
  non_integral_entry(const std::string &what, std::int64_t n, std::int64_t k,
                     std::string value)
      : sequence_error(what), n_(n), k_(k), value_(std::move(value)) {}
  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }
  const std::string &value() const noexcept { return value_; }

private:
  std::int64_t n_;
  std::int64_t k_;
  std::string value_;
};

// Raised when an internal cross-check disagrees. Always a bug.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace binomid
