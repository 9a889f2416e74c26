#pragma once

#include <compare>
#include <string>

#include "nsg/arith.hpp"

namespace nsg {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  Int floor() const noexcept { return floor_div(num_, den_); }
  Int ceil() const noexcept { return ceil_div(num_, den_); }

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  static Rational from_wide(Wide num, Wide den);

  Int num_ = 0;
  Int den_ = 1;
};

enum class DecimalMode { Truncate, RoundHalfAway };

/// Fixed-point decimal rendering computed exactly, e.g. 85/6 -> "14.16"
/// (Truncate) or "14.17" (RoundHalfAway).
std::string to_decimal(const Rational& value, int places,
                       DecimalMode mode = DecimalMode::Truncate);

}  // namespace nsg
