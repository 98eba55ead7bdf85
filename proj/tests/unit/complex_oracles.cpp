#include <doctest.h>

#include "winv/complex_gw.hpp"

using namespace winv;

TEST_CASE("plane rational curve counts") {
    Session s;
    CHECK(gw_p2(s, 1) == Rational(1));
    CHECK(gw_p2(s, 3) == Rational(12));
    CHECK(gw_p2(s, 4) == Rational(620));
    CHECK(gw_p2(s, 5) == Rational(87304));
    CHECK(gw_p2(s, 6) == Rational(26312976));
}

TEST_CASE("quadric surface counts") {
    Session s;
    CHECK(gw_p1p1(s, 1, 0) == Rational(1));
    CHECK(gw_p1p1(s, 2, 2) == Rational(12));
    CHECK(gw_p1p1(s, 3, 3) == Rational(3510));
    CHECK(gw_p1p1(s, 2, 3) == gw_p1p1(s, 3, 2));
    CHECK(gw_p1p1(s, 2, 3) == Rational(96));
}

TEST_CASE("blown up plane") {
    Session s;
    CHECK(gw_blowup(s, {3, {2}}) == Rational(1));
    CHECK(gw_blowup(s, {4, {2, 2}}) == Rational(12));
    CHECK(gw_blowup(s, {4, {3}}) == Rational(1));
    CHECK(gw_blowup(s, {4, {2}}) == Rational(96));
    CHECK(gw_blowup(s, {1, {1, 1}}) == Rational(1));
    CHECK(gw_blowup(s, {0, {-1}}) == Rational(1));
    CHECK(gw_blowup(s, {2, {1, 1, 1, 1, 1}}) == Rational(1));
}

TEST_CASE("projective three-space") {
    Session s;
    CHECK(gw_p3(s, 1, {3, 3}) == Rational(1));
    CHECK(gw_p3(s, 1, {2, 2, 3}) == Rational(1));
    CHECK(gw_p3(s, 1, {2, 2, 2, 2}) == Rational(2));
    CHECK(gw_p3(s, 2, {2, 2, 2, 2, 2, 2, 2, 2}) == Rational(92));
    CHECK(gw_p3(s, 2, {3, 3, 3, 3}) == Rational(0));
    CHECK(gw_p3(s, 3, Tuple(12, 2)) == Rational(80160));
}

TEST_CASE("triple product of lines") {
    Session s;
    Vec3 pt{1, 1, 1};
    CHECK(gw_p1cubed(s, {1, 0, 0}, {pt}) == Rational(1));
    CHECK(gw_p1cubed(s, {1, 1, 1}, {pt, pt, pt}) == Rational(1));
    CHECK(gw_p1cubed(s, {1, 1, 0}, {pt, pt}) == Rational(0));
    CHECK(gw_p1cubed(s, {2, 2, 2}, std::vector<Vec3>(6, pt)) == gw_p1cubed(s, {2, 2, 2}, std::vector<Vec3>(6, pt)));
    Session off(Options{.closed_forms = false});
    for (Vec3 d : {Vec3{1, 1, 1}, Vec3{2, 1, 1}, Vec3{2, 2, 1}}) {
        std::vector<Vec3> m(norm(d) - 1, pt);
        m.push_back({1, 1, 0});
        m.push_back({0, 1, 1});
        CAPTURE(d[0]);
        CHECK(gw_p1cubed(s, d, m) == gw_p1cubed(off, d, m));
    }
}

TEST_CASE("(P1)^3 slices and half basis") {
    Session s;
    Vec3 pt{1, 1, 1}, l3{1, 1, 0};
    // a class inside a slice, through a point and 2(d1+d2)-2 lines of the third kind
    std::vector<Vec3> m{pt};
    m.insert(m.end(), 6, l3);
    CHECK(gw_p1cubed(s, {2, 2, 0}, m) == Rational(12));
    // unbalanced insertions give nothing
    CHECK(gw_p1cubed(s, {1, 1, 1}, {pt, pt}) == Rational(0));
    CHECK(gw_p1cubed_halfbasis(s, {1, 0}, {{2, 1}}) == Rational(1));
    CHECK(gw_p1cubed_halfbasis(s, {0, 2}, {{2, 1}}) == Rational(1, 2));
    CHECK(gw_p1cubed_halfbasis(s, {1, 1}, {{2, 1}}) == Rational(0));
}
