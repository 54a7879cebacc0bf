#include <doctest.h>

#include <random>

#include "kahlercalc/errors.hpp"
#include "kahlercalc/rational.hpp"
#include "test_support.hpp"

using namespace kahlercalc;
using kahlercalc::testing::rand_rational;

TEST_SUITE("rational") {

TEST_CASE("normalization to canonical form") {
  CHECK(BigRational(BigInt(4), BigInt(-6)) == BigRational(BigInt(-2), BigInt(3)));
  CHECK(BigRational(BigInt(4), BigInt(-6)).num() == BigInt(-2));
  CHECK(BigRational(BigInt(4), BigInt(-6)).den() == BigInt(3));
  CHECK(BigRational(BigInt(0), BigInt(7)).num() == 0);
  CHECK(BigRational(BigInt(0), BigInt(7)).den() == 1);
  CHECK(BigRational(BigInt(100), BigInt(1)).str() == "100");
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);
  CHECK_THROWS_WITH(BigRational(BigInt(1), BigInt(0)), "division by zero");
}

TEST_CASE("parse and serialize") {
  CHECK(BigRational::parse("3/4").str() == "3/4");
  CHECK(BigRational::parse("-5").str() == "-5");
  CHECK(BigRational::parse("0").str() == "0");
  CHECK(BigRational::parse("-6/4").str() == "-3/2");
  CHECK(BigRational::parse("123456789012345678901234567890/3").num() ==
        BigInt("41152263004115226300411522630"));
  CHECK_THROWS_AS(BigRational::parse("3/"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("/4"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("+3"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("3/-4"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("a"), ParseError);
  CHECK_THROWS_AS(BigRational::parse(""), ParseError);
  CHECK_THROWS_AS(BigRational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("3/0"), DomainError);
}

TEST_CASE("arithmetic") {
  const BigRational a = BigRational::parse("2/3");
  const BigRational b = BigRational::parse("-1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "5/6");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK((-a).str() == "-2/3");
  CHECK_THROWS_AS(a / BigRational(0), DomainError);
  CHECK(a < BigRational(1));
  CHECK(b < a);
  CHECK(BigRational(2) > BigRational::parse("3/2"));
}

TEST_CASE("integer powers") {
  CHECK(BigRational::parse("2/3").pow(3).str() == "8/27");
  CHECK(BigRational::parse("2/3").pow(0).str() == "1");
  CHECK(BigRational::parse("2/3").pow(-2).str() == "9/4");
  CHECK(BigRational(10).pow(30).num() == int_pow(BigInt(10), 30));
  CHECK_THROWS_AS(BigRational(0).pow(-1), DomainError);
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 300; ++i) {
    const BigRational a = rand_rational(rng);
    const BigRational b = rand_rational(rng);
    const BigRational c = rand_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + BigRational(0) == a);
    CHECK(a * BigRational(1) == a);
    CHECK(a + (-a) == BigRational(0));
    if (!a.is_zero()) CHECK(a * (BigRational(1) / a) == BigRational(1));
  }
}

TEST_CASE("canonical invariants hold after arithmetic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BigRational a = rand_rational(rng);
    const BigRational b = rand_rational(rng);
    for (const BigRational& v : {a + b, a * b, a - b}) {
      CHECK(v.den() > 0);
      CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(v.num()),
                                       v.den()) == 1);
    }
  }
}

TEST_CASE("decimal approximation by exact long division") {
  CHECK(BigRational::parse("400/3").decimal() == "133.333");
  CHECK(BigRational::parse("1/3").decimal() == "0.333333");
  CHECK(BigRational::parse("-25/9").decimal() == "-2.77778");
  CHECK(BigRational(85).decimal() == "85");
  CHECK(BigRational(0).decimal() == "0");
  CHECK(BigRational::parse("2277/2").decimal() == "1138.5");
  CHECK(BigRational::parse("1/300000000").decimal() == "3.33333e-9");
  CHECK(BigRational(BigInt("616370624828441745782")).decimal() == "6.16371e+20");
  CHECK(BigRational::parse("999999999/1").decimal() == "1000000000");
  CHECK(BigRational::parse("1/10000").decimal() == "0.0001");
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
}

}  // TEST_SUITE
