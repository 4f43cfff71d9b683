#pragma once

#include <string>

#include "fibzeta/modmath.hpp"

namespace fibzeta {

i128 gcd_i128(i128 a, i128 b);
std::string to_string_i128(i128 v);

// Exact rational over 128-bit integers, always stored reduced with a
// positive denominator. Arithmetic is overflow-checked and throws
// std::overflow_error rather than wrapping; the magnitudes this project
// needs (up to ~7^25) sit far below the limit.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(i128 num, i128 den);
  static ExactRational from_int(i128 n) { return ExactRational(n, 1); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  ExactRational operator+(const ExactRational& o) const;
  ExactRational operator-(const ExactRational& o) const;
  ExactRational operator*(const ExactRational& o) const;
  ExactRational operator/(const ExactRational& o) const;
  ExactRational operator-() const;
  ExactRational abs() const;

  bool operator==(const ExactRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const ExactRational& o) const;
  bool operator<=(const ExactRational& o) const;
  bool operator>(const ExactRational& o) const { return o < *this; }
  bool operator>=(const ExactRational& o) const { return o <= *this; }

  double to_double() const;
  std::string to_fraction_string() const;            // "25/144", "3"
  // Fixed-point rendering with round-half-even, e.g. (1, 3) at 6 places
  // -> "0.333333". Exact integer arithmetic throughout.
  std::string to_decimal_string(int places) const;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

// ell^e as a rational, e possibly negative.
ExactRational pow_rational(u64 base, int exp);

}  // namespace fibzeta
