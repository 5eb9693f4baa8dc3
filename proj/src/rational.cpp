#include "binomid/rational.hpp"

#include <stdexcept>

namespace binomid {

ExactRational::ExactRational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational &ExactRational::operator/=(const ExactRational &o) {
  if (o.is_zero())
    throw std::domain_error("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string ExactRational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt ipow(const BigInt &base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

} // namespace binomid
