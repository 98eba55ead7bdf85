#include <doctest.h>

#include "winv/error.hpp"
#include "winv/tables.hpp"

using namespace winv;

TEST_CASE("file names") {
    CHECK(table_file_name(1) == "T01.csv");
    CHECK(table_file_name(20) == "T20.csv");
}

TEST_CASE("csv round trip keeps quoting and empty cells") {
    Session s;
    Table t = build_table(s, 6);
    std::string text = render_csv(t);
    CHECK(text.rfind("\"d,b\",\"4,(2)\"", 0) == 0);
    Table back = parse_csv(text);
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK(compare_tables(t, back).empty());
    CHECK(render_csv(back) == text);
}

TEST_CASE("comparison reports each differing cell") {
    Session s;
    Table a = build_table(s, 1);
    Table b = a;
    b.cells[1][2] = Rational(7);
    b.cells[2][0].reset();
    auto diff = compare_tables(a, b);
    REQUIRE(diff.size() == 2);
    CHECK(diff[0].row == "l=0");
    CHECK(diff[0].column == "d=3");
    CHECK(diff[0].expected == "8");
    CHECK(diff[0].actual == "7");
}

TEST_CASE("json mirrors the csv layout") {
    Session s;
    Table t = build_table(s, 2);
    auto j = render_json(t);
    CHECK(j["table"] == 2);
    CHECK(j["columns"].size() == t.columns.size());
    CHECK(j["rows"][0]["label"] == "C");
    CHECK(j["rows"][0]["values"][2] == "3510");
}

TEST_CASE("blowup classes come from the table columns") {
    auto v = blowup_classes(6);
    REQUIRE(v.size() == 8);
    CHECK(v[0].d == 4);
    CHECK(v[0].a.empty());
    CHECK(v[0].b == Tuple{2});
    CHECK(blowup_classes(1).empty());
}

TEST_CASE("malformed csv") {
    CHECK_THROWS_AS(parse_csv(""), ParseError);
    CHECK_THROWS_AS(read_csv_file("/nonexistent/T01.csv"), Error);
}
