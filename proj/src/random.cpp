#include "exactrn/random.hpp"

#include <string>
#include <vector>

#include "exactrn/errors.hpp"

namespace exactrn {

std::uint64_t Rng::next_u64() {
  // SplitMix64 (Steele, Lea, Flood 2014). Public-domain reference constants.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: zero bound");
  // Lemire reduction: high 64 bits of a 128-bit product. The modulo bias is
  // at most bound/2^64, far below anything a 10^4-case battery can see.
  unsigned __int128 product =
      static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

std::int64_t Rng::int_between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("Rng::int_between: empty range");
  std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   below(span));
}

bool Rng::chance(std::uint64_t denom) { return below(denom) == 0; }

Rng Rng::fork(std::uint64_t label) const {
  Rng mixer(state_ ^ (label * 0x9e3779b97f4a7c15ULL));
  return Rng(mixer.next_u64());
}

Rat random_rat(Rng& rng, std::int64_t magnitude) {
  if (magnitude < 1) throw DomainError("random_rat: magnitude must be >= 1");
  std::int64_t num = rng.int_between(-magnitude, magnitude);
  std::int64_t den = rng.int_between(1, magnitude);
  return Rat(num, den);
}

Vec<Rat> random_rat_vec(Rng& rng, std::size_t dim, std::int64_t magnitude) {
  std::vector<Rat> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    entries.push_back(random_rat(rng, magnitude));
  }
  return Vec<Rat>(std::move(entries));
}

Hyper random_hyper(Rng& rng, std::int64_t magnitude) {
  std::vector<std::pair<int, Rat>> terms;
  std::uint64_t count = rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    int exponent = static_cast<int>(rng.int_between(-2, 2));
    terms.emplace_back(exponent, random_rat(rng, magnitude));
  }
  return Hyper::from_terms(terms);
}

Vec<Hyper> random_hyper_vec(Rng& rng, std::size_t dim,
                            std::int64_t magnitude) {
  std::vector<Hyper> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    entries.push_back(random_hyper(rng, magnitude));
  }
  return Vec<Hyper>(std::move(entries));
}

Hyper random_small_hyper(Rng& rng, std::int64_t magnitude) {
  if (rng.chance(8)) return Hyper();
  std::vector<std::pair<int, Rat>> terms;
  std::uint64_t count = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < count; ++i) {
    int exponent = static_cast<int>(rng.int_between(1, 4));
    terms.emplace_back(exponent, random_rat(rng, magnitude));
  }
  Hyper h = Hyper::from_terms(terms);
  // Coefficients can vanish; all survivors still have exponent >= 1.
  return h;
}

Hyper random_limited_hyper(Rng& rng, std::int64_t magnitude) {
  if (rng.chance(8)) return Hyper();
  std::vector<std::pair<int, Rat>> terms;
  std::uint64_t count = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < count; ++i) {
    int exponent = static_cast<int>(rng.int_between(0, 3));
    terms.emplace_back(exponent, random_rat(rng, magnitude));
  }
  return Hyper::from_terms(terms);
}

}  // namespace exactrn
