#pragma once

#include <cstdint>

#include "exactrn/hyper.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn {

/// Deterministic generator for test batteries: SplitMix64 over a 64-bit
/// state, with bounded draws by 128-bit multiply-shift. Identical seeds give
/// identical streams on every platform, which is what makes structured
/// reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform draw in [lo, hi], inclusive.
  std::int64_t int_between(std::int64_t lo, std::int64_t hi);
  /// True once in `denom` draws on average.
  bool chance(std::uint64_t denom);

  /// Independent substream: mixes a label into the current seed without
  /// consuming from this stream.
  Rng fork(std::uint64_t label) const;

 private:
  std::uint64_t state_;
};

/// Rational with numerator in [-magnitude, magnitude] and denominator in
/// [1, magnitude] (magnitude >= 1).
Rat random_rat(Rng& rng, std::int64_t magnitude);
Vec<Rat> random_rat_vec(Rng& rng, std::size_t dim, std::int64_t magnitude);

/// Sparse hyperreal: up to three terms with exponents in [-2, 2] and
/// random_rat coefficients. May be zero.
Hyper random_hyper(Rng& rng, std::int64_t magnitude);
Vec<Hyper> random_hyper_vec(Rng& rng, std::size_t dim, std::int64_t magnitude);

/// Infinitesimal sample: zero or valuation >= 1.
Hyper random_small_hyper(Rng& rng, std::int64_t magnitude);
/// Limited sample: zero or valuation >= 0.
Hyper random_limited_hyper(Rng& rng, std::int64_t magnitude);

}  // namespace exactrn
