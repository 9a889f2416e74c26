#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "nsg/rational.hpp"

namespace nsg {

/// Exact real number of the form (p + sign * sqrt(d)) / q with q > 0, d >= 0
/// and sign in {-1, +1}. All comparisons are decided by sign tests on
/// squares; no floating point is involved.
class QuadraticSurd {
 public:
  QuadraticSurd(Int p, int sign, Int d, Int q);

  Int p() const noexcept { return p_; }
  int sign() const noexcept { return sign_; }
  Int d() const noexcept { return d_; }
  Int q() const noexcept { return q_; }

  /// Set when d is a perfect square, i.e. the value is rational.
  std::optional<Rational> as_rational() const;

  Int floor() const;
  QuadraticSurd negated() const;
  /// c * value, c > 0.
  QuadraticSurd scaled(Int c) const;
  /// value + 1/2.
  QuadraticSurd plus_half() const;

  /// "(p + √d)/q" / "(p - √d)/q".
  std::string str() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Int p_;
  int sign_;
  Int d_;
  Int q_;
};

/// Ordering of t relative to sqrt(d), d >= 0.
std::strong_ordering compare_with_root(const Rational& t, Int d);

std::strong_ordering compare(const Rational& x, const QuadraticSurd& s);
std::strong_ordering compare(const QuadraticSurd& s, const Rational& x);

std::string to_decimal(const QuadraticSurd& value, int places,
                       DecimalMode mode = DecimalMode::Truncate);

/// A special parameter value: rational, or a quadratic surd.
using SpecialValue = std::variant<Rational, QuadraticSurd>;

/// Exact comparison. Two surds are comparable when they share the radicand
/// (or either is actually rational); other pairs throw std::logic_error.
std::strong_ordering compare(const SpecialValue& a, const SpecialValue& b);
Int floor(const SpecialValue& v);
std::string to_decimal(const SpecialValue& v, int places,
                       DecimalMode mode = DecimalMode::Truncate);
std::string exact_str(const SpecialValue& v);

}  // namespace nsg
