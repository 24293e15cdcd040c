#include <catch2/catch_amalgamated.hpp>

#include <piforge/checked.hpp>
#include <piforge/errors.hpp>
#include <piforge/rational.hpp>

using namespace piforge;

TEST_CASE("checked arithmetic traps overflow") {
    const i64 big = INT64_MAX;
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK(checked_sub(3, 10) == -7);
    CHECK(checked_neg(-7) == 7);
    CHECK(checked_abs(-7) == 7);
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), OverflowError);
    CHECK_THROWS_AS(checked_abs(INT64_MIN), OverflowError);
    CHECK(checked_div_exact(12, -4) == -3);
    CHECK_THROWS_AS(checked_div_exact(11, 4), StructuralError);
}

TEST_CASE("gcd and lcm helpers") {
    CHECK(gcd_i64(12, -18) == 6);
    CHECK(gcd_i64(0, 0) == 0);
    CHECK(gcd_i64(0, 7) == 7);
    CHECK(lcm_i64(4, 6) == 12);
    CHECK(lcm_i64(1, 1) == 1);
}

TEST_CASE("rationals are kept canonical") {
    const Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), StructuralError);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(half < Rational(2, 3));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(half.sign() == 1);
    CHECK(Rational(0).sign() == 0);
    CHECK((-half).sign() == -1);
}

TEST_CASE("inverse and pow") {
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).inverse(), NotInvertible);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), NotInvertible);
}

TEST_CASE("rational text form") {
    CHECK(Rational(9, 2).str() == "9/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("is_integer and is_zero") {
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
}
