#include <doctest.h>

#include "winv/real_fourfold.hpp"

using namespace winv;

TEST_CASE("plane Welschinger counts") {
    Session s;
    CHECK(wel_p2(s, 1, 0) == Rational(1));
    CHECK(wel_p2(s, 3, 0) == Rational(8));
    CHECK(wel_p2(s, 4, 0) == Rational(240));
    CHECK(wel_p2(s, 5, 0) == Rational(18264));
    CHECK(wel_p2(s, 5, 3) == Rational(1872));
    CHECK(wel_p2(s, 7, 10) == Rational(-14336));
    CHECK(wel_p2(s, 8, 11) == Rational(-280576));
    CHECK(wel_p2(s, 2, 3) == Rational(0));  // more pairs than constraints allow
}

TEST_CASE("the two plane relations agree") {
    Session a, b(Options{.p2_prefer_alt = true});
    for (long d = 1; d <= 6; ++d)
        for (long l = 0; 2 * l <= 3 * d - 1; ++l) CHECK(wel_p2(a, d, l) == wel_p2(b, d, l));
}

TEST_CASE("quadric with the twisted involution") {
    Session s, alt(Options{.twisted_prefer_alt = true});
    CHECK(wel_twisted(s, 1, 0) == Rational(1));
    CHECK(wel_twisted(s, 2, 0) == Rational(6));
    CHECK(wel_twisted(s, 3, 0) == Rational(576));
    CHECK(wel_twisted(s, 1, 2) == Rational(0));
    for (long d = 1; d <= 4; ++d)
        for (long l = 0; 2 * l <= 4 * d - 1; ++l) CHECK(wel_twisted(s, d, l) == wel_twisted(alt, d, l));
}

TEST_CASE("quadric with the product involution") {
    Session s;
    CHECK(wel_product(s, 2, 2, 0) == Rational(8));
    CHECK(wel_product(s, 2, 3, 0) == Rational(48));
    CHECK(wel_product(s, 3, 3, 0) == Rational(1086));
    CHECK(wel_product(s, 3, 2, 0) == wel_product(s, 2, 3, 0));
}

TEST_CASE("real blowups") {
    Session s;
    // d = 7 through a conjugate pair of double points, eight pairs of points
    CHECK(wel_blowup(s, {7, {}, {2}}, 8) == Rational(-4096));
    // unit multiplicities drop out
    CHECK(wel_blowup(s, {5, {1}, {}}, 2) == wel_p2(s, 5, 2));
    CHECK(wel_blowup(s, {5, {}, {1}}, 2) == wel_p2(s, 5, 3));
    // an exceptional-like class that is not effective
    CHECK(wel_blowup(s, {1, {1, 1, 1}, {}}, 0) == Rational(0));
}

TEST_CASE("blowup pivots and unit handling do not change values") {
    Session a, b(Options{.blowup_pivot = Pivot::Smallest}), c(Options{.blowup_keep_units = true});
    for (RealBlowupClass v : {RealBlowupClass{5, {2, 2}, {}}, RealBlowupClass{6, {3, 2}, {1}},
                              RealBlowupClass{6, {2}, {2}}, RealBlowupClass{5, {1}, {2, 1}}}) {
        Rational x = wel_blowup(a, v, 0);
        CHECK(wel_blowup(b, v, 0) == x);
        CHECK(wel_blowup(c, v, 0) == x);
    }
}
