#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactrn/rat.hpp"

namespace exactrn {

/// Computable hyperreal: a finitely supported formal series sum_k c_k * e^k
/// with rational coefficients, where e is a fixed positive infinitesimal and
/// e^-1 the canonical infinite element. The empty series is 0. Ordering is by
/// the leading (minimal-exponent) term, which makes e smaller than every
/// positive rational.
///
/// All infinitesimal classifications are single reads of the valuation; none
/// of them recurses through another classification.
class Hyper {
 public:
  Hyper() = default;
  Hyper(int standard) : Hyper(Rat(standard)) {}
  Hyper(long long standard) : Hyper(Rat(standard)) {}
  Hyper(Rat standard);

  /// e^k (defaults to the infinitesimal itself; negative k gives infinite
  /// elements).
  static Hyper eps(int k = 1);
  static Hyper term(int exponent, Rat coeff);
  /// Merges duplicate exponents and drops zero coefficients.
  static Hyper from_terms(const std::vector<std::pair<int, Rat>>& terms);

  /// Exponent -> coefficient, ascending, no zero coefficients stored.
  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimal exponent of the support; nullopt for 0.
  std::optional<int> valuation() const;
  /// Coefficient at the minimal exponent. Requires a nonzero value.
  const Rat& leading_coeff() const;
  /// Sign of the leading coefficient; 0 for the zero element.
  int sign() const;

  Hyper& operator+=(const Hyper& o);
  Hyper& operator-=(const Hyper& o);
  Hyper& operator*=(const Hyper& o);
  friend Hyper operator+(Hyper a, const Hyper& b) { a += b; return a; }
  friend Hyper operator-(Hyper a, const Hyper& b) { a -= b; return a; }
  friend Hyper operator*(const Hyper& a, const Hyper& b);
  Hyper operator-() const;

  bool operator==(const Hyper&) const = default;
  std::strong_ordering operator<=>(const Hyper& o) const;

  friend Hyper abs(const Hyper& a) { return a.sign() < 0 ? -a : a; }

  /// Infinitesimal: zero or valuation >= 1.
  bool is_i_small() const;
  /// Infinite magnitude: valuation <= -1.
  bool is_i_large() const;
  /// Not infinite.
  bool is_i_limited() const;
  /// Coefficient at exponent 0 (0 when absent). Requires a limited value;
  /// infinite input is a DomainError.
  Rat standard_part() const;

  /// Truncated inverse: returns y with x*y == 1 + r where every exponent of
  /// r exceeds valuation(x*y) + order_k. Exact when x is a single term (the
  /// geometric correction series vanishes). Requires x != 0.
  Hyper inverse(int order_k = 16) const;

  /// Human form, e.g. "3 + 5e - 1/2e^2". Serialization to/from exponent
  /// pairs lives with the report layer; see terms().
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Hyper& a);

 private:
  std::map<int, Rat> terms_;

  void add_term(int exponent, const Rat& coeff);
};

inline int cmp(const Hyper& a, const Hyper& b) {
  auto c = a <=> b;
  return std::is_lt(c) ? -1 : (std::is_gt(c) ? 1 : 0);
}

}  // namespace exactrn
