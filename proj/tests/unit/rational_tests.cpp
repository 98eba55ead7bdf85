#include <doctest.h>

#include "winv/error.hpp"
#include "winv/rational.hpp"

using namespace winv;

TEST_CASE("rationals stay in lowest terms") {
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
}

TEST_CASE("text form round trips") {
    for (const char* t : {"0", "7", "-280576", "1/2", "-45/8", "13525751027392"})
        CHECK(Rational::parse(t).str() == t);
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("arithmetic and order") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(-a == Rational(-1, 3));
    CHECK(b < a);
    CHECK(pow2(3) == Rational(8));
    CHECK(pow2(-2) == Rational(1, 4));
    CHECK(sign_pow(3) == -1);
}

TEST_CASE("binomials") {
    CHECK(binom(5, 2) == Rational(10));
    CHECK(binom(5, 7) == Rational(0));
    CHECK(binom(5, -1) == Rational(0));
    CHECK(binom(60, 30) == Rational(Integer("118264581564861424")));
}

TEST_CASE("exact division and integrality guards") {
    CHECK(exact_div(Rational(3), Rational(4)) == Rational(3, 4));
    CHECK_THROWS_AS(exact_div(Rational(3), Rational(0), "K"), ArithmeticError);
    CHECK(assert_integral(Rational(12)) == 12);
    CHECK_THROWS_AS(assert_integral(Rational(1, 2), "K"), ArithmeticError);
}
