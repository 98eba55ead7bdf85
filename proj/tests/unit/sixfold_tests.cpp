#include <doctest.h>

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"
#include "winv/real_sixfold.hpp"

using namespace winv;

TEST_CASE("real lines in P3") {
    Session s;
    CHECK(rgw_p3(s, 1, {}) == Rational(1));
    CHECK(rgw_p3(s, 1, {3}) == Rational(-1));
    CHECK(rgw_p3(s, 1, {2, 2}) == Rational(-1));
    CHECK(rgw_p3(s, 1, {1, 3}) == Rational(-1));  // a plane pair only scales by d
    CHECK(rgw_p3(s, 1, {2}) == Rational(0));      // k = 1 has the forbidden parity
}

TEST_CASE("conics in P3 by either relation") {
    Session s, alt(Options{.sixfold_prefer_alt = true});
    CHECK(rgw_p3(s, 2, {3, 2}) == Rational(-1));
    CHECK(rgw_p3(alt, 2, {3, 2}) == Rational(-1));
}

TEST_CASE("P3 parity with the shortcut off") {
    Session off(Options{.parity_shortcut = false});
    for (long d = 1; d <= 3; ++d)
        for (long n2 = 0; n2 <= 2 * d; ++n2) {
            Tuple m(n2, 2);
            if ((d - k_p3(d, m)) % 2 == 0) CHECK(rgw_p3(off, d, m).is_zero());
        }
}

TEST_CASE("(P1)^3 base values") {
    for (bool closed : {true, false}) {
        Session s(Options{.closed_forms = closed});
        CHECK(rgw_product(s, {1, 1, 1}, {}) == Rational(-1));
        CHECK(rgw_twisted(s, {1, 1}, {}) == Rational(1));
        CHECK(rgw_twisted(s, {1, 0}, {{2, 0}}) == Rational(-1, 2));
        CHECK(rgw_product(s, {1, 0, 0}, {}) == Rational(1));
    }
}

TEST_CASE("product involution ignores the coordinate order") {
    Session s;
    Vec3 a{1, 1, 0}, b{0, 1, 1};
    CHECK(rgw_product(s, {2, 1, 1}, {a}) == rgw_product(s, {1, 1, 2}, {b}));
    CHECK(rgw_product(s, {2, 2, 2}, {{1, 1, 0}, {1, 1, 0}, {1, 1, 1}}) ==
          rgw_product(s, {2, 2, 2}, {{0, 1, 1}, {0, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("fiber classes match the recursion") {
    Session a, b(Options{.closed_forms = false});
    for (long d1 = 0; d1 <= 3; ++d1)
        for (long d2 = 0; d1 + d2 <= 3; ++d2) {
            if (d1 + d2 == 0) continue;
            for (long n = 0; n <= d1 + d2; ++n) {
                std::vector<Vec3> m(n, Vec3{1, 1, 0});
                CHECK(rgw_product(a, {d1, d2, 1}, m) == rgw_product(b, {d1, d2, 1}, m));
            }
        }
}

TEST_CASE("degree zero is a scheduling error") {
    Session s;
    CHECK_THROWS_AS(rgw_twisted(s, {0, 0}, {}), SchedulingError);
}

TEST_CASE("orientation flip negates k = 3 mod 4") {
    Session a, b(Options{.flip_k3mod4 = true});
    CHECK(rgw_product(b, {1, 1, 1}, {}) == -rgw_product(a, {1, 1, 1}, {}));
    std::vector<Vec3> m{{1, 1, 0}};
    const long k = k_p1cubed({2, 2, 2}, m);
    CHECK(k % 4 == 1);
    CHECK(rgw_product(b, {2, 2, 2}, m) == rgw_product(a, {2, 2, 2}, m));
}
