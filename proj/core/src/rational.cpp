#include "nsg/rational.hpp"

#include <numeric>
#include <string>

namespace nsg {

namespace {

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide pow10(int places) {
  Wide p = 1;
  for (int i = 0; i < places; ++i) p *= 10;
  return p;
}

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                             static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<Wide>(a.num_) * b.num_,
                             static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidParams, "division by zero rational");
  return Rational::from_wide(static_cast<Wide>(a.num_) * b.den_,
                             static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string to_decimal(const Rational& value, int places, DecimalMode mode) {
  Wide scale = pow10(places);
  Wide mag = value.num() < 0 ? -static_cast<Wide>(value.num()) : value.num();
  Wide scaled;
  if (mode == DecimalMode::Truncate) {
    scaled = mag * scale / value.den();
  } else {
    scaled = (2 * mag * scale + value.den()) / (2 * static_cast<Wide>(value.den()));
  }
  std::string digits = wide_to_string(scaled);
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<size_t>(places + 1 - static_cast<int>(digits.size())), '0');
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
  }
  if (value.num() < 0 && scaled != 0) digits.insert(digits.begin(), '-');
  return digits;
}

}  // namespace nsg
