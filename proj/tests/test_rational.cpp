#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "manna/errors.hpp"
#include "manna/rational.hpp"

using namespace manna;

TEST_CASE("construction normalizes to canonical form") {
  Rat a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  Rat b(-6, 4);
  CHECK(b.numerator() == -3);
  CHECK(b.denominator() == 2);
  Rat c(3, -2);
  CHECK(c.numerator() == -3);
  CHECK(c.denominator() == 2);
  CHECK(Rat(0, 17).is_zero());
  CHECK_THROWS_AS(Rat(1, 0), FormatError);
}

TEST_CASE("addition agrees with the cross-multiplication identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-40, 40);
  for (int k = 0; k < 500; ++k) {
    long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0 || e == 0) continue;
    CHECK(Rat(a, b) + Rat(c, e) == Rat(a * e + c * b, b * e));
  }
}

TEST_CASE("ordering and arithmetic basics") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, 4) * Rat(4, 3) == Rat(1));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK((-Rat(5, 7)).sign() == -1);
  CHECK(Rat(5, 7).abs() == Rat(-5, 7).abs());
  CHECK(Rat(3, 7).reciprocal() == Rat(7, 3));
  CHECK_THROWS_AS(Rat(1) / Rat(0), FormatError);
  CHECK_THROWS_AS(Rat(0).reciprocal(), FormatError);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0", "1", "-1", "4", "-2", "3/4", "-7/3", "16/7"}) {
    CHECK(Rat::parse(s).str() == s);
  }
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("+3") == Rat(3));
  CHECK_THROWS_AS(Rat::parse(""), FormatError);
  CHECK_THROWS_AS(Rat::parse("1/"), FormatError);
  CHECK_THROWS_AS(Rat::parse("/2"), FormatError);
  CHECK_THROWS_AS(Rat::parse("a"), FormatError);
  CHECK_THROWS_AS(Rat::parse("1.5"), FormatError);
  CHECK_THROWS_AS(Rat::parse("1/0"), FormatError);
  CHECK_THROWS_AS(Rat::parse("2/-3"), FormatError);
}

TEST_CASE("big values stay exact") {
  Rat big(1, 3);
  Rat p(1);
  for (int i = 0; i < 40; ++i) p *= big;
  Rat q = p;
  for (int i = 0; i < 40; ++i) q /= big;
  CHECK(q == Rat(1));
  CHECK(Rat(1LL << 62) + Rat(1LL << 62) == Rat(1LL << 62) * Rat(2));
}

TEST_CASE("vector helpers") {
  RatVec a{Rat(1), Rat(2), Rat(3)};
  RatVec b{Rat(1, 2), Rat(1, 3), Rat(1, 6)};
  CHECK(dot(a, b) == Rat(1, 2) + Rat(2, 3) + Rat(1, 2));
  CHECK(sum(b) == Rat(1));
  CHECK(lex_less({Rat(1), Rat(5)}, {Rat(2), Rat(0)}));
  CHECK(lex_less({Rat(1), Rat(0)}, {Rat(1), Rat(1)}));
  CHECK(!lex_less({Rat(1), Rat(1)}, {Rat(1), Rat(1)}));
  CHECK(to_string(b) == "(1/2, 1/3, 1/6)");
}
