#include "doctest.h"

#include "exactrn/errors.hpp"
#include "exactrn/random.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/surd.hpp"

using namespace exactrn;

namespace {
// 2^-p as an exact rational.
Rat pow2_inv(unsigned p) { return Rat(BigInt(1), BigInt(1) << p); }
}  // namespace

TEST_CASE("sqrt_leq decides root comparisons without roots") {
  CHECK(sqrt_leq(Rat(4), Rat(2)));
  CHECK(sqrt_leq(Rat(2), Rat(3, 2)));
  CHECK_FALSE(sqrt_leq(Rat(2), Rat(-1)));
  CHECK_FALSE(sqrt_leq(Rat(2), Rat(7, 5)));
  CHECK(sqrt_leq(Rat(0), Rat(0)));
  CHECK_FALSE(sqrt_leq(Rat(1, 100), Rat(0)));
  CHECK_THROWS_AS(sqrt_leq(Rat(-1), Rat(5)), DomainError);
}

TEST_CASE("sqrt_sum_leq decides the two-root comparison") {
  CHECK(sqrt_sum_leq(Rat(4), Rat(1), Rat(1)));
  CHECK_FALSE(sqrt_sum_leq(Rat(5), Rat(1), Rat(1)));
  CHECK(sqrt_sum_leq(Rat(2), Rat(1), Rat(1)));
  CHECK(sqrt_sum_leq(Rat(0), Rat(0), Rat(0)));
  CHECK_THROWS_AS(sqrt_sum_leq(Rat(-1), Rat(1), Rat(1)), DomainError);
  CHECK_THROWS_AS(sqrt_sum_leq(Rat(1), Rat(-1), Rat(1)), DomainError);
  CHECK_THROWS_AS(sqrt_sum_leq(Rat(1), Rat(1), Rat(-1)), DomainError);

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Rat a = abs(random_rat(rng, 100)), b = abs(random_rat(rng, 100));
    CHECK(sqrt_sum_leq(a + b, a, b));
  }
}

TEST_CASE("sqrt_sum_eq recognizes exact equality") {
  CHECK(sqrt_sum_eq(Rat(4), Rat(1), Rat(1)));
  CHECK(sqrt_sum_eq(Rat(9), Rat(1), Rat(4)));
  CHECK_FALSE(sqrt_sum_eq(Rat(2), Rat(1), Rat(1)));
  CHECK_FALSE(sqrt_sum_eq(Rat(5), Rat(1), Rat(1)));
  CHECK(sqrt_sum_eq(Rat(0), Rat(0), Rat(0)));

  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    // c = (s + t)^2 with s, t >= 0 rational gives sqrt(c) = s + t exactly.
    Rat s = abs(random_rat(rng, 50)), t = abs(random_rat(rng, 50));
    Rat c = (s + t) * (s + t);
    CHECK(sqrt_sum_eq(c, s * s, t * t));
  }
}

TEST_CASE("approx_sqrt is exact on perfect squares and zero") {
  CHECK(approx_sqrt(Rat(4), 8) == Rat(2));
  CHECK(approx_sqrt(Rat(4), 30) == Rat(2));
  CHECK(approx_sqrt(Rat(9, 4), 16) == Rat(3, 2));
  CHECK(approx_sqrt(Rat(0), 10) == Rat(0));
  CHECK_THROWS_AS(approx_sqrt(Rat(-2), 10), DomainError);
}

TEST_CASE("approx_sqrt error bound at p bits") {
  // |r - sqrt(2)| <= 2^-20 forces |r^2 - 2| <= 2^-20 * (2*sqrt(2) + 2^-20),
  // comfortably below 3 * 2^-20.
  Rat r = approx_sqrt(Rat(2), 20);
  CHECK(r >= Rat(0));
  CHECK(abs(r * r - Rat(2)) <= Rat(3) * pow2_inv(20));

  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Rat a = abs(random_rat(rng, 1000));
    Rat s = approx_sqrt(a, 32);
    CHECK(s >= Rat(0));
    // |s^2 - a| <= 2^-32 * (2*sqrt(a) + 2^-32) and sqrt(a) <= max(1, a).
    Rat budget = pow2_inv(32) * (Rat(2) * (a < Rat(1) ? Rat(1) : a) + pow2_inv(32));
    CHECK(abs(s * s - a) <= budget);
  }
}

TEST_CASE("sqrt_leq agrees with its defining inequality") {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    Rat a = abs(random_rat(rng, 200));
    Rat b = random_rat(rng, 200);
    CHECK(sqrt_leq(a, b) == (b >= Rat(0) && a <= b * b));
  }
}

TEST_CASE("sqrt_leq agrees with the 64-bit approximate oracle") {
  Rng rng(15);
  const Rat tol = pow2_inv(64);
  for (int i = 0; i < 2000; ++i) {
    Rat a = abs(random_rat(rng, 200));
    Rat b = random_rat(rng, 200);
    if (b < Rat(0)) continue;
    Rat r = approx_sqrt(a, 64);
    if (r + tol <= b) CHECK(sqrt_leq(a, b));
    if (r - tol > b) CHECK_FALSE(sqrt_leq(a, b));
  }
}

TEST_CASE("sqrt_sum_leq agrees with the 64-bit approximate oracle") {
  Rng rng(16);
  // Approximation error of rc - ra - rb is under 3 * 2^-64, far below the
  // 2^-60 margin that gates the cross-check.
  const Rat margin = pow2_inv(60);
  for (int i = 0; i < 2000; ++i) {
    Rat a = abs(random_rat(rng, 200));
    Rat b = abs(random_rat(rng, 200));
    Rat c = abs(random_rat(rng, 200));
    Rat ra = approx_sqrt(a, 64), rb = approx_sqrt(b, 64), rc = approx_sqrt(c, 64);
    Rat diff = rc - ra - rb;
    if (diff > margin) CHECK_FALSE(sqrt_sum_leq(c, a, b));
    if (diff < -margin) CHECK(sqrt_sum_leq(c, a, b));
  }
}
