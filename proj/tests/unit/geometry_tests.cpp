#include <doctest.h>

#include "winv/geometry.hpp"

#include <algorithm>

using namespace winv;

TEST_CASE("constraint counts") {
    CHECK(ell_p2(5) == 14);
    CHECK(ell_p1p1(2, 3) == 9);
    CHECK(ell_blowup({4, {2, 2}}) == 7);
    CHECK(ell_real_blowup({5, {2}, {1}}) == 10);
    CHECK(k_p3(2, {3, 2}) == 1);
    CHECK(k_p1cubed({1, 1, 1}, {}) == 3);
    CHECK(k_twisted({1, 1}, {}) == 3);
    CHECK(k_twisted({2, 2}, {{1, 1}, {2, 0}, {2, 1}}) == 2);
}

TEST_CASE("effective classes") {
    CHECK(is_effective_blowup(3, {2}));
    CHECK(is_effective_blowup(1, {1, 1}));
    CHECK_FALSE(is_effective_blowup(1, {1, 1, 1}));
    CHECK_FALSE(is_effective_blowup(2, {3}));
}

TEST_CASE("complex tuple doubles the conjugate entries") {
    Tuple c = complex_tuple({5, {2}, {1, 3}});
    std::sort(c.begin(), c.end());
    CHECK(c == Tuple{1, 1, 2, 3, 3});
}

TEST_CASE("canonical form of (P1)^3 keys ignores coordinate order") {
    Vec3 d{2, 1, 0};
    std::vector<Vec3> m{{1, 1, 0}, {0, 1, 1}};
    auto ref = canonical_p1cubed(d, m);
    for (auto p : {std::array<int, 3>{1, 0, 2}, {2, 1, 0}, {1, 2, 0}}) {
        Vec3 pd{d[p[0]], d[p[1]], d[p[2]]};
        std::vector<Vec3> pm;
        for (auto it = m.rbegin(); it != m.rend(); ++it) pm.push_back({(*it)[p[0]], (*it)[p[1]], (*it)[p[2]]});
        CHECK(canonical_p1cubed(pd, pm) == ref);
    }
}

TEST_CASE("box and multiset enumeration") {
    int n = 0;
    for_each_box({1, 2}, [&](const Tuple&) { ++n; });
    CHECK(n == 6);
    n = 0;
    for_each_box({1, -1}, [&](const Tuple&) { ++n; });
    CHECK(n == 0);
    long labelled = 0;
    for_each_multiset_split(Tuple{2, 2, 3}, [&](const Tuple&, const Tuple&, long mult) { labelled += mult; });
    CHECK(labelled == 8);
}

TEST_CASE("degree splits and preimages") {
    CHECK(degree_splits(3).size() == 2);
    CHECK(halvable(4));
    CHECK_FALSE(halvable(3));
    CHECK(small_binom(6, 3) == 20);
}
