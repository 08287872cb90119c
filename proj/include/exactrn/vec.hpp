#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactrn/errors.hpp"

namespace exactrn {

/// Ordered scalar field: exact ring operations, a total order, absolute
/// value, and construction of 0 / 1 / -1 from int. Rat and Hyper both model
/// this, so every vector operation below runs over either.
template <typename S>
concept ScalarField = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a < b } -> std::convertible_to<bool>;
  { abs(a) } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

/// Fixed-length ordered tuple of scalars; dim 0 is legal.
template <ScalarField S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<S> entries) : entries_(std::move(entries)) {}
  Vec(std::initializer_list<S> entries) : entries_(entries) {}

  static Vec zero(std::size_t dim) { return Vec(std::vector<S>(dim, S(0))); }

  std::size_t dim() const { return entries_.size(); }
  const S& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<S>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const Vec&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) os << ", ";
      os << entries_[i].str();
    }
    os << "]";
    return os.str();
  }

 private:
  std::vector<S> entries_;
};

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

template <ScalarField S>
Vec<S> vec_add(const Vec<S>& u, const Vec<S>& v) {
  detail::require_same_dim(u.dim(), v.dim(), "vec_add");
  std::vector<S> out;
  out.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(u[i] + v[i]);
  return Vec<S>(std::move(out));
}

template <ScalarField S>
Vec<S> scalar_mul(const S& a, const Vec<S>& v) {
  std::vector<S> out;
  out.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(a * v[i]);
  return Vec<S>(std::move(out));
}

/// Subtraction through the additive inverse: u + (-1)*v.
template <ScalarField S>
Vec<S> vec_sub(const Vec<S>& u, const Vec<S>& v) {
  detail::require_same_dim(u.dim(), v.dim(), "vec_sub");
  return vec_add(u, scalar_mul(S(-1), v));
}

/// Componentwise subtraction; extensionally equal to vec_sub (tested as an
/// invariant rather than assumed).
template <ScalarField S>
Vec<S> vec_sub_direct(const Vec<S>& u, const Vec<S>& v) {
  detail::require_same_dim(u.dim(), v.dim(), "vec_sub_direct");
  std::vector<S> out;
  out.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(u[i] - v[i]);
  return Vec<S>(std::move(out));
}

/// True iff every entry is 0; true for dim 0.
template <ScalarField S>
bool zvecp(const Vec<S>& v) {
  for (const S& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

/// sum_i u_i * v_i; 0 for empty vectors.
template <ScalarField S>
S dot(const Vec<S>& u, const Vec<S>& v) {
  detail::require_same_dim(u.dim(), v.dim(), "dot");
  S acc(0);
  for (std::size_t i = 0; i < u.dim(); ++i) acc = acc + u[i] * v[i];
  return acc;
}

template <ScalarField S>
S norm_sq(const Vec<S>& v) {
  return dot(v, v);
}

template <ScalarField S>
S metric_sq(const Vec<S>& x, const Vec<S>& y) {
  detail::require_same_dim(x.dim(), y.dim(), "metric_sq");
  return norm_sq(vec_sub(x, y));
}

/// max_i |v_i|; 0 for the empty vector.
template <ScalarField S>
S max_abs(const Vec<S>& v) {
  S best(0);
  for (const S& x : v) {
    S a = abs(x);
    if (best < a) best = a;
  }
  return best;
}

}  // namespace exactrn
