#include <doctest.h>

#include <random>

#include "ksinv/errors.hpp"
#include "ksinv/rational.hpp"

using ksinv::DomainError;
using ksinv::Integer;
using ksinv::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000), den(1, 5000);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(6, 8).to_string() == "3/4");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parse accepts the serialized forms") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-9/896") == Rational(-9, 896));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
}

TEST_CASE("serialization round-trips through parse") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng) * random_rational(rng);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("floor and fractional part for negative values") {
  CHECK(Rational(-1, 14).floor() == -1);
  CHECK(Rational(-1, 14).fractional_part() == Rational(13, 14));
  CHECK(Rational(7, 2).fractional_part() == Rational(1, 2));
  CHECK(Rational(-3).fractional_part() == Rational(0));
}

TEST_CASE("pow, abs, reciprocal, ordering") {
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(-2, 3).reciprocal() == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("big values stay exact") {
  const Rational big = Rational(Integer("123456789012345678901234567890"), Integer("987654321"));
  CHECK((big * big) / big == big);
  CHECK((big + Rational(1)) - big == Rational(1));
}

TEST_CASE("field laws and canonical form on random inputs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const Rational r = a * b - c;
    CHECK(r.denominator() >= 1);
    CHECK(gcd(r.numerator(), r.denominator()) == 1);
  }
}
