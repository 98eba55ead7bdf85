// One line per acceptance criterion; exit status is the number of failures.

#include "winv/session.hpp"
#include "winv/tables.hpp"
#include "winv/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#ifndef WINV_GOLDEN_DIR
#define WINV_GOLDEN_DIR "golden"
#endif

using namespace winv;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void fail(const std::string& why) {
        if (!pass) note << "; ";
        else note.str("");
        pass = false;
        note << why;
    }
};

// value of one cell in a freshly built table, or "" when absent
std::string cell(int number, const std::string& row, const std::string& column) {
    Session s;
    Table t = build_table(s, number);
    auto r = std::find(t.rows.begin(), t.rows.end(), row);
    auto c = std::find(t.columns.begin(), t.columns.end(), column);
    if (r == t.rows.end() || c == t.columns.end()) return "";
    const auto& v = t.cells[r - t.rows.begin()][c - t.columns.begin()];
    return v ? v->str() : "";
}

Outcome tables_within(std::initializer_list<int> numbers, double limit) {
    Outcome o;
    double total = 0;
    for (int n : numbers) {
        Check c = check_table(n, WINV_GOLDEN_DIR);
        total += c.seconds;
        if (!c.pass) o.fail(c.name + ": " + c.detail);
    }
    if (total > limit) o.fail("took " + std::to_string(total) + "s, limit " + std::to_string(limit) + "s");
    if (o.pass)
        o.note << numbers.size() << (numbers.size() == 1 ? " table" : " tables") << " exact, cold, "
               << std::fixed << std::setprecision(2) << total << "s (limit " << limit << "s)";
    return o;
}

void expect_cell(Outcome& o, int number, const std::string& row, const std::string& column,
                 const std::string& want) {
    std::string got = cell(number, row, column);
    if (got != want) o.fail(table_file_name(number) + " " + row + "/" + column + " = '" + got + "'");
}

// each suite runs once even when several criteria draw on it
const std::vector<Check>& suite(const std::string& name) {
    static std::map<std::string, std::vector<Check>> done;
    auto it = done.find(name);
    if (it == done.end()) {
        VerifyConfig cfg;
        cfg.golden_dir = WINV_GOLDEN_DIR;
        it = done.emplace(name, run_suite(name, cfg)).first;
    }
    return it->second;
}

// every check whose name starts with one of the prefixes
Outcome checks(const std::vector<std::string>& suites, const std::vector<std::string>& prefixes) {
    Outcome o;
    long count = 0;
    for (const auto& s : suites)
        for (const auto& c : suite(s)) {
            bool wanted = std::any_of(prefixes.begin(), prefixes.end(),
                                      [&](const std::string& p) { return c.name.rfind(p, 0) == 0; });
            if (!wanted) continue;
            ++count;
            if (!c.pass) o.fail(c.name + ": " + c.detail);
        }
    if (count == 0) o.fail("no checks ran");
    if (o.pass) o.note << count << " checks";
    return o;
}

}  // namespace

int main() {
    std::vector<Outcome> results;

    {
        Outcome o = tables_within({1}, 10);
        expect_cell(o, 1, "l=10", "d=7", "-14336");
        expect_cell(o, 1, "l=11", "d=8", "-280576");
        results.push_back(std::move(o));
    }
    results.push_back(tables_within({2, 3}, 30));
    {
        Outcome o = tables_within({4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18}, 300);
        expect_cell(o, 6, "l=8", "7,(2)", "-4096");
        results.push_back(std::move(o));
    }
    results.push_back(tables_within({19, 20}, 300));
    results.push_back(checks({"p3", "cross"}, {"p3.", "cross.p3"}));
    results.push_back(checks({"cross"}, {"cross.p2", "cross.twisted", "cross.pivot", "cross.units"}));
    results.push_back(checks({"fiber"}, {"fiber."}));
    results.push_back(checks({"integrality", "symmetry", "parity", "flip", "memo", "determinism"},
                             {"integrality.", "symmetry.", "parity.", "flip.", "memo.", "determinism."}));

    const char* labels[] = {"P2 table",           "P1xP1 tables",      "blowup tables",
                            "(P1)^3 tables",      "P3 properties",     "cross-recursions",
                            "fiber closed forms", "structural suites"};
    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::cout << "criterion " << i + 1 << " " << std::left << std::setw(20) << labels[i]
                  << (results[i].pass ? "PASS" : "FAIL") << "  "
                  << results[i].note.str() << "\n";
        if (!results[i].pass) ++failures;
    }
    return failures;
}
