#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace binomid {

using BigInt = mpz_class;

// Reduced fraction with a positive denominator. Integrality is
// `denominator() == 1`.
class ExactRational {
public:
  ExactRational() : value_(0) {}
  ExactRational(long v) : value_(v) {}
  ExactRational(const BigInt &v) : value_(v) {}
  ExactRational(const BigInt &num, const BigInt &den);
  explicit ExactRational(mpq_class v) : value_(std::move(v)) {
    value_.canonicalize();
  }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  const mpq_class &raw() const noexcept { return value_; }

  // Decimal "num" or "num/den".
  std::string to_string() const;

  ExactRational &operator+=(const ExactRational &o) {
    value_ += o.value_;
    return *this;
  }
  ExactRational &operator-=(const ExactRational &o) {
    value_ -= o.value_;
    return *this;
  }
  ExactRational &operator*=(const ExactRational &o) {
    value_ *= o.value_;
    return *this;
  }
  ExactRational &operator/=(const ExactRational &o);

  friend ExactRational operator+(ExactRational a, const ExactRational &b) {
    return a += b;
  }
  friend ExactRational operator-(ExactRational a, const ExactRational &b) {
    return a -= b;
  }
  friend ExactRational operator*(ExactRational a, const ExactRational &b) {
    return a *= b;
  }
  friend ExactRational operator/(ExactRational a, const ExactRational &b) {
    return a /= b;
  }
  friend bool operator==(const ExactRational &a, const ExactRational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational &a,
                                          const ExactRational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }
  friend std::ostream &operator<<(std::ostream &os, const ExactRational &r) {
    return os << r.to_string();
  }

private:
  mpq_class value_;
};

// Integer power by repeated squaring. Exponent must be nonnegative.
BigInt ipow(const BigInt &base, unsigned long exponent);

} // namespace binomid
