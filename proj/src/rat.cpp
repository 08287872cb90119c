#include "exactrn/rat.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace exactrn {

Rat::Rat(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  // cpp_rational requires a positive denominator; the sign lives on the
  // numerator.
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = boost::multiprecision::cpp_rational(std::move(numerator), std::move(denominator));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.value_ = -value_;
  return r;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << value_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.value_; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits_to_int(std::string_view s) {
  BigInt v = 0;
  for (char c : s) {
    v *= 10;
    v += c - '0';
  }
  return v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw ParseError("empty rational literal", text.size());
  }

  auto fail = [&](std::size_t offset) -> Rat {
    throw ParseError("malformed rational literal '" + std::string(text) + "'", offset);
  };

  BigInt num;
  BigInt den = 1;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view p = rest.substr(0, slash);
    std::string_view q = rest.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return fail(slash);
    num = digits_to_int(p);
    den = digits_to_int(q);
    if (den.is_zero()) {
      throw DomainError("rational with zero denominator");
    }
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return fail(dot);
    num = digits_to_int(whole);
    for (std::size_t i = 0; i < frac.size(); ++i) num *= 10;
    num += digits_to_int(frac);
    den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  } else {
    if (!all_digits(rest)) return fail(0);
    num = digits_to_int(rest);
  }
  if (negative) num = -num;
  return Rat(std::move(num), std::move(den));
}

}  // namespace exactrn
