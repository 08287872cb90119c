#include "exactrn/hyper.hpp"

#include <ostream>
#include <sstream>

#include "exactrn/errors.hpp"

namespace exactrn {

Hyper::Hyper(Rat standard) {
  if (!standard.is_zero()) {
    terms_.emplace(0, std::move(standard));
  }
}

Hyper Hyper::eps(int k) { return term(k, Rat(1)); }

Hyper Hyper::term(int exponent, Rat coeff) {
  Hyper h;
  if (!coeff.is_zero()) {
    h.terms_.emplace(exponent, std::move(coeff));
  }
  return h;
}

Hyper Hyper::from_terms(const std::vector<std::pair<int, Rat>>& terms) {
  Hyper h;
  for (const auto& [exponent, coeff] : terms) {
    h.add_term(exponent, coeff);
  }
  return h;
}

void Hyper::add_term(int exponent, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Hyper::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

const Rat& Hyper::leading_coeff() const {
  if (terms_.empty()) {
    throw DomainError("leading coefficient of zero");
  }
  return terms_.begin()->second;
}

int Hyper::sign() const { return terms_.empty() ? 0 : terms_.begin()->second.sign(); }

Hyper& Hyper::operator+=(const Hyper& o) {
  for (const auto& [exponent, coeff] : o.terms_) {
    add_term(exponent, coeff);
  }
  return *this;
}

Hyper& Hyper::operator-=(const Hyper& o) {
  for (const auto& [exponent, coeff] : o.terms_) {
    add_term(exponent, -coeff);
  }
  return *this;
}

Hyper operator*(const Hyper& a, const Hyper& b) {
  Hyper product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product.add_term(ea + eb, ca * cb);
    }
  }
  return product;
}

Hyper& Hyper::operator*=(const Hyper& o) {
  *this = *this * o;
  return *this;
}

Hyper Hyper::operator-() const {
  Hyper neg;
  for (const auto& [exponent, coeff] : terms_) {
    neg.terms_.emplace(exponent, -coeff);
  }
  return neg;
}

std::strong_ordering Hyper::operator<=>(const Hyper& o) const {
  int s = (*this - o).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Hyper::is_i_small() const {
  auto v = valuation();
  return !v || *v >= 1;
}

bool Hyper::is_i_large() const {
  auto v = valuation();
  return v && *v <= -1;
}

bool Hyper::is_i_limited() const { return !is_i_large(); }

Rat Hyper::standard_part() const {
  if (is_i_large()) {
    throw DomainError("standard part of an infinite element");
  }
  auto it = terms_.find(0);
  return it == terms_.end() ? Rat(0) : it->second;
}

Hyper Hyper::inverse(int order_k) const {
  if (terms_.empty()) {
    throw DomainError("inverse of zero");
  }
  if (order_k < 0) {
    throw DomainError("truncation order must be nonnegative");
  }
  // With x = c*e^v * (1 + s) and val(s) >= 1, the truncated inverse is
  // (1/c)*e^-v * sum_{j<=K} (-s)^j, leaving x*y = 1 - (-s)^(K+1).
  int v = *valuation();
  const Rat& c = leading_coeff();
  Hyper base = term(-v, Rat(1) / c);
  Hyper s = *this * base - Hyper(1);
  if (s.is_zero()) return base;
  Hyper acc(1);
  Hyper power(1);
  for (int j = 1; j <= order_k; ++j) {
    power *= -s;
    acc += power;
  }
  return acc * base;
}

std::string Hyper::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, coeff] : terms_) {
    Rat magnitude = abs(coeff);
    if (first) {
      if (coeff.sign() < 0) os << "-";
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
    }
    if (exponent == 0) {
      os << magnitude.str();
    } else {
      if (!(magnitude == Rat(1))) os << magnitude.str();
      os << "e";
      if (exponent != 1) os << "^" << exponent;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Hyper& a) { return os << a.str(); }

}  // namespace exactrn
