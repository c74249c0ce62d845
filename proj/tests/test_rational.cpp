#include <catch_amalgamated.hpp>

#include <stdexcept>

#include "carries/rational.hpp"
#include "carries/rng.hpp"

using carries::Int;
using carries::Rational;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());

  SECTION("denominator is kept positive") {
    const Rational q(1, -2);
    CHECK(q.num() == -1);
    CHECK(q.den() == 2);
  }
  SECTION("zero denominator refused") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  }
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-6/8") == Rational(-3, 4));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational(22, 7).to_string() == "22/7");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("arithmetic basics") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5, 7).pow(0) == Rational(1));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 3).sign() == 1);
  CHECK(Rational(-7, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("field laws on randomized triples") {
  carries::Xoshiro256StarStar rng(20260814);
  const auto random_rational = [&rng]() {
    const long num = static_cast<long>(rng.uniform_below(2001)) - 1000;
    const long den = static_cast<long>(rng.uniform_below(999)) + 1;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const Rational c = random_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // Re-normalizing an already-canonical value changes nothing.
    CHECK(Rational(a.num(), a.den()) == a);
  }
}

TEST_CASE("approx is close for display purposes") {
  CHECK(Rational(1, 2).approx() == 0.5);
  CHECK(Rational(23, 24).approx() == Catch::Approx(0.9583333333).epsilon(1e-9));
}
