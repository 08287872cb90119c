#include "exactrn/surd.hpp"

namespace exactrn {

namespace {

void require_nonnegative(const Rat& x, const char* what) {
  if (x.sign() < 0) {
    throw DomainError(std::string(what) + " must be nonnegative, got " + x.str());
  }
}

}  // namespace

bool sqrt_leq(const Rat& a, const Rat& b) {
  require_nonnegative(a, "radicand");
  if (b.sign() < 0) return false;
  return a <= b * b;
}

bool sqrt_sum_leq(const Rat& c, const Rat& a, const Rat& b) {
  require_nonnegative(c, "left radicand");
  require_nonnegative(a, "right radicand");
  require_nonnegative(b, "right radicand");
  Rat t = c - a - b;
  if (t.sign() <= 0) return true;
  return t * t <= Rat(4) * a * b;
}

bool sqrt_sum_eq(const Rat& c, const Rat& a, const Rat& b) {
  require_nonnegative(c, "left radicand");
  require_nonnegative(a, "right radicand");
  require_nonnegative(b, "right radicand");
  Rat t = c - a - b;
  return t.sign() >= 0 && t * t == Rat(4) * a * b;
}

Rat approx_sqrt(const Rat& a, unsigned precision_bits) {
  require_nonnegative(a, "radicand");
  if (precision_bits < 1) {
    throw DomainError("precision must be at least one bit");
  }
  // floor(a * 4^p) has integer square root s with s <= sqrt(a)*2^p < s + 1,
  // so s / 2^p lands within 2^-p of the true root.
  BigInt scaled = (a.numerator() << (2 * precision_bits)) / a.denominator();
  BigInt root = boost::multiprecision::sqrt(scaled);
  return Rat(std::move(root), BigInt(1) << precision_bits);
}

}  // namespace exactrn
