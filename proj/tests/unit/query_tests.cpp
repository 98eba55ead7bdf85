#include <doctest.h>

#include "winv/error.hpp"
#include "winv/query.hpp"

using namespace winv;

namespace {

Query make(Space sp, std::string inv, Tuple d) {
    Query q;
    q.space = sp;
    q.involution = std::move(inv);
    q.degree = std::move(d);
    return q;
}

}  // namespace

TEST_CASE("command line examples") {
    Session s;
    Query a = make(Space::P2, "tau2", {5});
    a.pairs = 3;
    validate(a);
    CHECK(evaluate(s, a) == Rational(1872));
    CHECK(canonical_key(a) == "P2|tau2|d=5|l=3");

    Query b = make(Space::P3, "tau3", {1});
    b.insertions = {"3"};
    validate(b);
    CHECK(evaluate(s, b) == Rational(-1));
    CHECK(canonical_key(b) == "P3|tau3|d=1|m=3");

    Query c = make(Space::P1P1, "twisted", {1});
    c.pairs = 2;
    validate(c);
    CHECK(evaluate(s, c) == Rational(0));
}

TEST_CASE("keys are canonical") {
    Query a = make(Space::Blowup, "real", {5});
    a.a = {1, 2};
    a.b = {1};
    validate(a);
    CHECK(canonical_key(a) == "BL(2,1)|real|5;2,1;1|l=0");

    Query p = make(Space::P1Cubed, "phi3", {1, 2, 2});
    p.insertions = {"011", "110"};
    Query q = make(Space::P1Cubed, "phi3", {2, 2, 1});
    q.insertions = {"110", "011"};
    validate(p);
    validate(q);
    CHECK(canonical_key(p) == canonical_key(q));

    Query r = make(Space::P1P1, "", {3, 2});
    validate(r);
    CHECK(canonical_key(r) == "P1xP1||a=2,b=3");
}

TEST_CASE("spellings of involutions") {
    Query q = make(Space::P1Cubed, "phi3p", {1, 1});
    validate(q);
    CHECK(q.involution == "phi3'");
    Query c = make(Space::P2, "complex", {4});
    validate(c);
    CHECK(c.involution.empty());
}

TEST_CASE("malformed queries are usage errors") {
    CHECK_THROWS_AS(parse_space("p4"), UsageError);
    auto bad = [](Query q) { CHECK_THROWS_AS(validate(q), UsageError); };
    bad(make(Space::P2, "tau3", {2}));
    bad(make(Space::P2, "tau2", {1, 2}));
    bad(make(Space::P1Cubed, "phi3", {1, 1}));
    Query m = make(Space::P3, "tau3", {1});
    m.insertions = {"4"};
    bad(m);
    Query l = make(Space::P3, "tau3", {1});
    l.pairs = 1;
    bad(l);
    Query i = make(Space::P2, "tau2", {3});
    i.insertions = {"2"};
    bad(i);
    Query z = make(Space::P1Cubed, "phi3", {0, 0, 0});
    bad(z);
}

TEST_CASE("json record fields") {
    Session s;
    Query q = make(Space::P2, "tau2", {3});
    q.pairs = 1;
    validate(q);
    auto j = to_json(q, evaluate(s, q));
    for (const char* f : {"space", "involution", "class", "insertions", "pairs", "value", "key"})
        CHECK(j.contains(f));
    CHECK(j["value"] == "6");
    CHECK(j["space"] == "p2");
}
