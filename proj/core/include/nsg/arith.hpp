#pragma once

// Exact 64-bit integer helpers. Every operation either returns the exact
// result or throws ErrorCode::ArithmeticOverflow; nothing wraps silently.

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>

#include "nsg/error.hpp"

namespace nsg {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

[[noreturn]] inline void throw_overflow(const char* op) {
  throw Error(ErrorCode::ArithmeticOverflow,
              std::string("integer overflow in ") + op);
}

inline Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw_overflow("narrowing");
  return static_cast<Int>(v);
}

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

/// Largest integer <= a/b. b != 0.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Smallest integer >= a/b. b != 0.
constexpr Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Non-negative remainder of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(Int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "isqrt of a negative number");
  if (n < 2) return n;
  // Newton iteration from an upper start; converges monotonically downward.
  Wide x = n;
  Wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return static_cast<Int>(x);
}

inline bool is_perfect_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return static_cast<Wide>(r) * r == n;
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace nsg
