#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "exactrn/errors.hpp"

namespace exactrn {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in canonical form: denominator > 0
/// and gcd(|numerator|, denominator) == 1. Canonicalization happens on
/// construction, so equality is structural.
class Rat {
 public:
  Rat() : value_(0) {}
  Rat(int value) : value_(value) {}
  Rat(long long value) : value_(value) {}
  explicit Rat(BigInt value) : value_(std::move(value)) {}
  Rat(BigInt numerator, BigInt denominator);

  /// Accepts "p/q", a plain integer, or a decimal literal "a.b" (rationalized
  /// exactly, e.g. "0.25" -> 1/4). Sign goes on the numerator.
  static Rat parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  friend Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

  /// "p/q" with "/q" omitted when q == 1.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& a);

 private:
  boost::multiprecision::cpp_rational value_;
};

/// Three-way comparison as -1 / 0 / +1.
inline int cmp(const Rat& a, const Rat& b) {
  auto c = a <=> b;
  return std::is_lt(c) ? -1 : (std::is_gt(c) ? 1 : 0);
}

}  // namespace exactrn
