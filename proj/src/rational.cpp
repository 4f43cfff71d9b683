#include "fibzeta/rational.hpp"

namespace fibzeta {

namespace {

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: mul overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
  return r;
}

}  // namespace

i128 gcd_i128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

ExactRational::ExactRational(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd_i128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

ExactRational ExactRational::operator+(const ExactRational& o) const {
  // lcm-based addition keeps intermediates near the result's own size
  i128 g = gcd_i128(den_, o.den_);
  i128 n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
  i128 d = checked_mul(den_ / g, o.den_);
  return ExactRational(n, d);
}

ExactRational ExactRational::operator-(const ExactRational& o) const {
  return *this + (-o);
}

ExactRational ExactRational::operator*(const ExactRational& o) const {
  // cross-reduce first so the products stay small
  i128 g1 = gcd_i128(num_, o.den_);
  i128 g2 = gcd_i128(o.num_, den_);
  i128 n = checked_mul(num_ / g1, o.num_ / g2);
  i128 d = checked_mul(den_ / g2, o.den_ / g1);
  return ExactRational(n, d);
}

ExactRational ExactRational::operator/(const ExactRational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
  return *this * ExactRational(o.den_, o.num_);
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ExactRational ExactRational::abs() const { return num_ < 0 ? -*this : *this; }

bool ExactRational::operator<(const ExactRational& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

bool ExactRational::operator<=(const ExactRational& o) const {
  return checked_mul(num_, o.den_) <= checked_mul(o.num_, den_);
}

double ExactRational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

std::string ExactRational::to_fraction_string() const {
  if (den_ == 1) return to_string_i128(num_);
  return to_string_i128(num_) + "/" + to_string_i128(den_);
}

std::string ExactRational::to_decimal_string(int places) const {
  if (places < 0 || places > 30)
    throw std::invalid_argument("to_decimal_string: places out of range");
  bool neg = num_ < 0;
  i128 n = neg ? -num_ : num_;
  i128 scale = 1;
  for (int i = 0; i < places; ++i) scale = checked_mul(scale, 10);
  i128 t = checked_mul(n, scale);
  i128 q = t / den_;
  i128 rem = t % den_;
  i128 twice = checked_mul(rem, 2);
  if (twice > den_ || (twice == den_ && (q & 1)))
    ++q;  // round half to even
  std::string digits = to_string_i128(q % scale);
  std::string out = (neg && q != 0) ? "-" : "";
  out += to_string_i128(q / scale);
  if (places > 0) {
    out += ".";
    out += std::string(static_cast<size_t>(places) - digits.size(), '0') + digits;
  }
  return out;
}

ExactRational pow_rational(u64 base, int exp) {
  i128 p = 1;
  int e = exp < 0 ? -exp : exp;
  for (int i = 0; i < e; ++i) {
    i128 r;
    if (__builtin_mul_overflow(p, static_cast<i128>(base), &r))
      throw std::overflow_error("pow_rational: overflow");
    p = r;
  }
  return exp < 0 ? ExactRational(1, p) : ExactRational(p, 1);
}

}  // namespace fibzeta
