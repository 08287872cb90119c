#include "doctest.h"

#include "exactrn/errors.hpp"
#include "exactrn/random.hpp"
#include "exactrn/rat.hpp"

using namespace exactrn;

TEST_CASE("rational arithmetic on small values") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(5, 6) - Rat(1, 3) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(-Rat(3, 7) == Rat(-3, 7));
  CHECK(abs(Rat(-5, 3)) == Rat(5, 3));
}

TEST_CASE("multiplicative identity is neutral") {
  for (long long n : {-7LL, 0LL, 3LL, 123456789LL}) {
    Rat x(n, 11);
    CHECK(x * Rat(1) == x);
    CHECK(Rat(1) * x == x);
  }
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).numerator() == 1);
  CHECK(Rat(2, 4).denominator() == 2);
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, -2).numerator() == -1);
  CHECK(Rat(1, -2).denominator() == 2);
  CHECK(Rat(0, 17).denominator() == 1);
  CHECK(Rat(-6, -4) == Rat(3, 2));
}

TEST_CASE("string form omits a unit denominator") {
  CHECK(Rat(5, 6).str() == "5/6");
  CHECK(Rat(-1, 2).str() == "-1/2");
  CHECK(Rat(7).str() == "7");
  CHECK(Rat(-3).str() == "-3");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("parse accepts fractions, integers, and decimals") {
  CHECK(Rat::parse("5/6") == Rat(5, 6));
  CHECK(Rat::parse("-3/9") == Rat(-1, 3));
  CHECK(Rat::parse("42") == Rat(42));
  CHECK(Rat::parse("-17") == Rat(-17));
  CHECK(Rat::parse("+4") == Rat(4));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("2.50") == Rat(5, 2));
  CHECK(Rat::parse("-0.1") == Rat(-1, 10));
}

TEST_CASE("parse round-trips the string form") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Rat x = random_rat(rng, 1000000);
    CHECK(Rat::parse(x.str()) == x);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rat::parse("/2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rat::parse("--1"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1 / 2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
}

TEST_CASE("ordering and sign") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(cmp(Rat(1, 3), Rat(1, 2)) == -1);
  CHECK(cmp(Rat(2), Rat(2)) == 0);
  CHECK(cmp(Rat(3), Rat(2)) == 1);
  CHECK(Rat(-5).sign() == -1);
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(1, 9).sign() == 1);
}

TEST_CASE("field laws hold on random rationals") {
  Rng rng(42);
  const std::int64_t m = 1000;
  for (int i = 0; i < 2000; ++i) {
    Rat a = random_rat(rng, m), b = random_rat(rng, m), c = random_rat(rng, m);

    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + Rat(0) == a);
    CHECK((a + (-a)).is_zero());
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * Rat(1) == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (Rat(1) / a) == Rat(1));
  }
}
