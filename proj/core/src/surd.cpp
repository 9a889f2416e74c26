#include "nsg/surd.hpp"

#include <stdexcept>

namespace nsg {

namespace {

std::strong_ordering reverse(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater) return std::strong_ordering::less;
  return o;
}

std::strong_ordering wide_cmp(Wide a, Wide b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

QuadraticSurd::QuadraticSurd(Int p, int sign, Int d, Int q)
    : p_(p), sign_(sign < 0 ? -1 : 1), d_(d), q_(q) {
  if (d < 0) throw Error(ErrorCode::InvalidParams, "negative radicand");
  if (q <= 0) throw Error(ErrorCode::InvalidParams, "surd denominator must be positive");
}

std::optional<Rational> QuadraticSurd::as_rational() const {
  if (!is_perfect_square(d_)) return std::nullopt;
  return Rational(add(p_, sign_ * isqrt(d_)), q_);
}

Int QuadraticSurd::floor() const {
  Int r = isqrt(d_);
  bool exact = static_cast<Wide>(r) * r == d_;
  // floor(p + sign*sqrt(d)) first, then divide; valid because q > 0.
  Int top = sign_ > 0 ? add(p_, r) : sub(sub(p_, r), exact ? 0 : 1);
  return floor_div(top, q_);
}

QuadraticSurd QuadraticSurd::negated() const { return {-p_, -sign_, d_, q_}; }

QuadraticSurd QuadraticSurd::scaled(Int c) const {
  if (c <= 0) throw Error(ErrorCode::InvalidParams, "surd scale must be positive");
  return {mul(c, p_), sign_, mul(mul(c, c), d_), q_};
}

QuadraticSurd QuadraticSurd::plus_half() const {
  return {add(mul(2, p_), q_), sign_, mul(4, d_), mul(2, q_)};
}

std::string QuadraticSurd::str() const {
  return "(" + std::to_string(p_) + (sign_ > 0 ? " + " : " - ") + "√" +
         std::to_string(d_) + ")/" + std::to_string(q_);
}

std::strong_ordering compare_with_root(const Rational& t, Int d) {
  if (t.num() < 0) return std::strong_ordering::less;
  // t >= 0: compare t^2 = a^2/b^2 with d.
  Wide a = t.num();
  Wide b = t.den();
  return wide_cmp(a * a, static_cast<Wide>(d) * b * b);
}

std::strong_ordering compare(const Rational& x, const QuadraticSurd& s) {
  // x <=> (p + sign*sqrt(d))/q  iff  x*q - p <=> sign*sqrt(d).
  Rational t = x * Rational(s.q()) - Rational(s.p());
  if (s.sign() > 0) return compare_with_root(t, s.d());
  return reverse(compare_with_root(-t, s.d()));
}

std::strong_ordering compare(const QuadraticSurd& s, const Rational& x) {
  return reverse(compare(x, s));
}

std::string to_decimal(const QuadraticSurd& value, int places, DecimalMode mode) {
  if (auto r = value.as_rational()) return to_decimal(*r, places, mode);
  bool negative = compare(Rational(0), value) == std::strong_ordering::greater;
  QuadraticSurd mag = negative ? value.negated() : value;
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale = mul(scale, 10);
  QuadraticSurd scaled = mag.scaled(scale);
  Int digits_value = mode == DecimalMode::Truncate ? scaled.floor() : scaled.plus_half().floor();
  std::string digits = std::to_string(digits_value);
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<size_t>(places + 1 - static_cast<int>(digits.size())), '0');
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
  }
  if (negative && digits_value != 0) digits.insert(digits.begin(), '-');
  return digits;
}

std::strong_ordering compare(const SpecialValue& a, const SpecialValue& b) {
  auto normalize = [](const SpecialValue& v) -> SpecialValue {
    if (auto* s = std::get_if<QuadraticSurd>(&v))
      if (auto r = s->as_rational()) return *r;
    return v;
  };
  SpecialValue x = normalize(a);
  SpecialValue y = normalize(b);
  const auto* xr = std::get_if<Rational>(&x);
  const auto* yr = std::get_if<Rational>(&y);
  if (xr && yr) return *xr <=> *yr;
  if (xr) return compare(*xr, std::get<QuadraticSurd>(y));
  if (yr) return compare(std::get<QuadraticSurd>(x), *yr);

  const auto& s = std::get<QuadraticSurd>(x);
  const auto& u = std::get<QuadraticSurd>(y);
  if (s.d() != u.d()) throw std::logic_error("comparing surds with different radicands");
  // s - u = A + c*sqrt(d); sign decided against zero.
  Rational A = Rational(s.p(), s.q()) - Rational(u.p(), u.q());
  Rational c = Rational(s.sign(), s.q()) - Rational(u.sign(), u.q());
  if (c.num() == 0) return A <=> Rational(0);
  // A + c*sqrt(d) <=> 0  iff  c*sqrt(d) <=> -A.
  Rational bound = -A / c;  // sqrt(d) vs bound, direction flips when c < 0
  auto o = reverse(compare_with_root(bound, s.d()));  // sqrt(d) <=> bound
  return c.num() > 0 ? o : reverse(o);
}

Int floor(const SpecialValue& v) {
  return std::visit([](const auto& x) { return x.floor(); }, v);
}

std::string to_decimal(const SpecialValue& v, int places, DecimalMode mode) {
  return std::visit([&](const auto& x) { return to_decimal(x, places, mode); }, v);
}

std::string exact_str(const SpecialValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace nsg
