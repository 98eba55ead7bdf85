#include "winv/tables.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"
#include "winv/real_fourfold.hpp"
#include "winv/real_sixfold.hpp"

#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

namespace winv {

namespace {

enum class Kind { P2, Twisted, Product, BlowupA, BlowupB, BlowupAB, Fiber3, Fiber2 };

struct Spec {
    Kind kind;
    std::string corner;
    std::vector<std::string> columns;
};

std::vector<std::string> numbered(const char* prefix, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

const Spec& spec(int n) {
    static const std::vector<Spec> specs = {
        {Kind::P2, "d", numbered("d=", 8)},
        {Kind::Twisted, "d", numbered("d=", 7)},
        {Kind::Product, "(a,b)",
         {"(2,2)", "(2,3)", "(3,3)", "(2,4)", "(3,4)", "(4,4)", "(2,5)", "(3,5)", "(4,5)", "(5,5)"}},
        {Kind::BlowupA, "d,a",
         {"3,(2)", "4,(2)", "4,(3)", "5,(2)", "5,(3)", "5,(4)", "6,(2)", "6,(3)", "6,(4)", "6,(5)",
          "7,(2)"}},
        {Kind::BlowupA, "d,a",
         {"4,(2,2)", "5,(2,2)", "5,(3,2)", "6,(2,2)", "6,(3,2)", "6,(3,3)", "6,(4,2)", "7,(2,2)"}},
        {Kind::BlowupB, "d,b",
         {"4,(2)", "5,(2)", "6,(2)", "6,(3)", "7,(2)", "7,(3)", "8,(2)", "8,(3)"}},
        {Kind::BlowupA, "d,a",
         {"5,(2,2,2)", "5,(3,2,2)", "6,(2,2,2)", "6,(3,2,2)", "6,(3,3,2)", "6,(3,3,3)", "6,(4,2,2)",
          "7,(2,2,2)", "7,(3,2,2)", "7,(3,3,2)"}},
        {Kind::BlowupAB, "d,a,b",
         {"4,(2),(2)", "5,(2),(2)", "5,(3),(2)", "6,(2),(2)", "6,(3),(2)", "6,(2),(3)", "6,(3),(3)",
          "6,(4),(2)", "7,(2),(2)"}},
        {Kind::BlowupA, "d,a",
         {"5,(2,2,2,2)", "6,(2,2,2,2)", "6,(3,2,2,2)", "6,(3,3,2,2)", "6,(4,2,2,2)", "7,(2,2,2,2)",
          "7,(3,2,2,2)", "7,(3,3,2,2)", "7,(3,3,3,2)", "7,(3,3,3,3)"}},
        {Kind::BlowupAB, "d,a,b",
         {"5,(2,2),(2)", "5,(3,2),(2)", "6,(2,2),(2)", "6,(3,2),(2)", "6,(3,3),(2)", "6,(2,2),(3)",
          "6,(3,2),(3)", "7,(2,2),(2)"}},
        {Kind::BlowupB, "d,b",
         {"5,(2,2)", "6,(2,2)", "6,(3,2)", "7,(2,2)", "7,(3,2)", "7,(3,3)", "8,(2,2)", "8,(3,2)",
          "8,(3,3)"}},
        {Kind::BlowupA, "d,a",
         {"5,(2,2,2,2,2)", "6,(2,2,2,2,2)", "6,(3,2,2,2,2)", "6,(3,3,2,2,2)", "7,(2,2,2,2,2)",
          "7,(3,2,2,2,2)", "7,(3,3,2,2,2)", "7,(3,3,3,2,2)", "7,(3,3,3,3,2)"}},
        {Kind::BlowupAB, "d,a,b",
         {"5,(2,2,2),(2)", "6,(2,2,2),(2)", "6,(3,2,2),(2)", "6,(3,3,2),(2)", "6,(2,2,2),(3)",
          "7,(2,2,2),(2)"}},
        {Kind::BlowupAB, "d,a,b",
         {"5,(2),(2,2)", "6,(2),(2,2)", "6,(3),(2,2)", "6,(2),(3,2)", "6,(4),(2,2)", "7,(2),(2,2)"}},
        {Kind::BlowupA, "d,a",
         {"6,(2,2,2,2,2,2)", "6,(3,2,2,2,2,2)", "7,(2,2,2,2,2,2)", "7,(3,2,2,2,2,2)",
          "7,(3,3,2,2,2,2)", "7,(3,3,3,2,2,2)", "7,(3,3,3,3,2,2)", "7,(4,2,2,2,2,2)",
          "7,(4,3,2,2,2,2)"}},
        {Kind::BlowupAB, "d,a,b",
         {"6,(2,2,2,2),(2)", "6,(3,2,2,2),(2)", "7,(2,2,2,2),(2)", "7,(3,2,2,2),(2)",
          "7,(3,3,2,2),(2)", "7,(2,2,2,2),(3)", "7,(3,3,3,2),(2)"}},
        {Kind::BlowupAB, "d,a,b",
         {"6,(2,2),(2,2)", "6,(3,2),(2,2)", "7,(2,2),(2,2)", "7,(3,2),(2,2)", "7,(3,3),(2,2)",
          "7,(2,2),(3,2)", "7,(3,2),(3,2)"}},
        {Kind::BlowupB, "d,b",
         {"5,(2,2,2)", "6,(2,2,2)", "6,(3,2,2)", "7,(2,2,2)", "7,(3,2,2)", "7,(3,3,2)"}},
        {Kind::Fiber3, "(a1,a2,a3)",
         {"(1,0,0)", "(1,1,1)", "(2,1,0)", "(3,0,0)", "(2,2,1)", "(3,1,1)", "(3,2,0)", "(4,1,0)",
          "(5,0,0)"}},
        {Kind::Fiber2, "(a1,a2)",
         {"(1,0)", "(0,1)", "(2,1)", "(1,2)", "(3,0)", "(0,3)", "(3,2)", "(2,3)", "(4,1)", "(1,4)",
          "(5,0)", "(0,5)"}},
    };
    if (n < 1 || n > kTableCount) throw UsageError("no table " + std::to_string(n));
    return specs[static_cast<std::size_t>(n - 1)];
}

// leading integer (if any) followed by parenthesised groups
std::pair<long, std::vector<Tuple>> parse_label(const std::string& label) {
    static const std::regex lead(R"(^(?:d=)?(\d+))");
    static const std::regex group(R"(\(([\d,]*)\))");
    long d = 0;
    std::smatch m;
    if (std::regex_search(label, m, lead)) d = std::stol(m[1]);
    std::vector<Tuple> groups;
    for (std::sregex_iterator it(label.begin(), label.end(), group), end; it != end; ++it) {
        Tuple t;
        std::stringstream ss((*it)[1].str());
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) t.push_back(std::stol(item));
        groups.push_back(std::move(t));
    }
    return {d, groups};
}

// a column: number of real constraints at l pairs, and the two value getters
struct Column {
    std::function<long(long)> k;
    std::function<Rational(Session&)> complex;
    std::function<Rational(Session&, long)> real;
};

Column column(Kind kind, const std::string& label) {
    auto [d, g] = parse_label(label);
    switch (kind) {
    case Kind::P2:
        return {[d](long l) { return 3 * d - 1 - 2 * l; }, [d](Session& s) { return gw_p2(s, d); },
                [d](Session& s, long l) { return wel_p2(s, d, l); }};
    case Kind::Twisted:
        return {[d](long l) { return 4 * d - 1 - 2 * l; },
                [d](Session& s) { return gw_p1p1(s, d, d); },
                [d](Session& s, long l) { return wel_twisted(s, d, l); }};
    case Kind::Product: {
        long a = g.at(0).at(0), b = g.at(0).at(1);
        return {[=](long l) { return 2 * (a + b) - 1 - 2 * l; },
                [=](Session& s) { return gw_p1p1(s, a, b); },
                [=](Session& s, long l) { return wel_product(s, a, b, l); }};
    }
    case Kind::BlowupA:
    case Kind::BlowupB:
    case Kind::BlowupAB: {
        RealBlowupClass v{d, {}, {}};
        if (kind == Kind::BlowupA || kind == Kind::BlowupAB) v.a = g.at(0);
        if (kind == Kind::BlowupB) v.b = g.at(0);
        if (kind == Kind::BlowupAB) v.b = g.at(1);
        return {[v](long l) { return ell_real_blowup(v) - 2 * l; },
                [v](Session& s) { return gw_blowup(s, {v.d, complex_tuple(v)}); },
                [v](Session& s, long l) { return wel_blowup(s, v, l); }};
    }
    case Kind::Fiber3: {
        Tuple a = g.at(0);
        long na = a[0] + a[1] + a[2];
        auto inserts = [a](long twice) {
            std::vector<Vec3> m;
            for (int r = 0; r < 3; ++r) {
                Vec3 x{1, 1, 1};
                x[r] = 0;
                m.insert(m.end(), static_cast<std::size_t>(a[r] * twice), x);
            }
            return m;
        };
        return {[na](long b) { return 6 - na - 2 * b; },
                [=](Session& s) {
                    auto m = inserts(2);
                    m.insert(m.end(), static_cast<std::size_t>(6 - na), Vec3{1, 1, 1});
                    return gw_p1cubed(s, {2, 2, 2}, m);
                },
                [=](Session& s, long b) {
                    auto m = inserts(1);
                    m.insert(m.end(), static_cast<std::size_t>(b), Vec3{1, 1, 1});
                    return rgw_product(s, {2, 2, 2}, m);
                }};
    }
    case Kind::Fiber2: {
        long a1 = g.at(0).at(0), a2 = g.at(0).at(1);
        return {[=](long b) { return 6 - a1 - a2 - 2 * b; },
                [=](Session& s) {
                    std::vector<Vec3> m;
                    m.insert(m.end(), a1, Vec3{0, 1, 1});
                    m.insert(m.end(), a1, Vec3{1, 0, 1});
                    m.insert(m.end(), 2 * a2, Vec3{1, 1, 0});
                    m.insert(m.end(), 6 - a1 - a2, Vec3{1, 1, 1});
                    return gw_p1cubed(s, {2, 2, 2}, m);
                },
                [=](Session& s, long b) {
                    std::vector<Pair2> m;
                    m.insert(m.end(), a1, Pair2{1, 1});
                    m.insert(m.end(), a2, Pair2{2, 0});
                    m.insert(m.end(), b, Pair2{2, 1});
                    // H2H3 ~ H1'H2', H1H2 = 2H1'^2, pt = 2H1'^2H2'
                    return pow2(a2 + b) * rgw_twisted(s, {2, 2}, m);
                }};
    }
    }
    throw UsageError("unknown table kind");
}

std::string quote(const std::string& f) {
    return f.find(',') == std::string::npos ? f : "\"" + f + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool q = false;
    for (char c : line) {
        if (c == '"')
            q = !q;
        else if (c == ',' && !q) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r')
            cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string table_file_name(int number) {
    return std::string("T") + (number < 10 ? "0" : "") + std::to_string(number) + ".csv";
}

Table build_table(Session& s, int number) {
    const Spec& sp = spec(number);
    Table t;
    t.number = number;
    t.corner = sp.corner;
    t.columns = sp.columns;
    std::vector<Column> cols;
    long rows = 0;
    for (const auto& c : sp.columns) {
        cols.push_back(column(sp.kind, c));
        long l = 0;
        while (cols.back().k(l) >= 0) ++l;
        rows = std::max(rows, l);
    }
    const bool fiber = sp.kind == Kind::Fiber3 || sp.kind == Kind::Fiber2;
    t.rows.push_back("C");
    t.cells.emplace_back();
    for (auto& c : cols) t.cells.back().push_back(c.complex(s));
    for (long l = 0; l < rows; ++l) {
        t.rows.push_back((fiber ? "b=" : "l=") + std::to_string(l));
        t.cells.emplace_back();
        for (auto& c : cols) {
            if (c.k(l) < 0)
                t.cells.back().push_back(std::nullopt);
            else
                t.cells.back().push_back(c.real(s, l));
        }
    }
    return t;
}

std::vector<RealBlowupClass> blowup_classes(int number) {
    const Spec& sp = spec(number);
    std::vector<RealBlowupClass> out;
    if (sp.kind != Kind::BlowupA && sp.kind != Kind::BlowupB && sp.kind != Kind::BlowupAB)
        return out;
    for (const auto& c : sp.columns) {
        auto [d, g] = parse_label(c);
        RealBlowupClass v{d, {}, {}};
        if (sp.kind != Kind::BlowupB) v.a = g.at(0);
        if (sp.kind == Kind::BlowupB) v.b = g.at(0);
        if (sp.kind == Kind::BlowupAB) v.b = g.at(1);
        out.push_back(std::move(v));
    }
    return out;
}

std::string render_csv(const Table& t) {
    std::string out = quote(t.corner);
    for (const auto& c : t.columns) out += "," + quote(c);
    out += "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += t.rows[r];
        for (const auto& cell : t.cells[r]) out += "," + (cell ? cell->str() : std::string());
        out += "\n";
    }
    return out;
}

nlohmann::json render_json(const Table& t) {
    nlohmann::json j;
    j["table"] = t.number;
    j["corner"] = t.corner;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        nlohmann::json row;
        row["label"] = t.rows[r];
        row["values"] = nlohmann::json::array();
        for (const auto& cell : t.cells[r])
            row["values"].push_back(cell ? nlohmann::json(cell->str()) : nlohmann::json());
        j["rows"].push_back(row);
    }
    return j;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty() || line == "\r") continue;
        auto f = split_csv_line(line);
        if (header) {
            t.corner = f.at(0);
            t.columns.assign(f.begin() + 1, f.end());
            header = false;
            continue;
        }
        if (f.size() != t.columns.size() + 1)
            throw ParseError("row " + f[0] + " has " + std::to_string(f.size() - 1) + " cells");
        t.rows.push_back(f[0]);
        t.cells.emplace_back();
        for (std::size_t i = 1; i < f.size(); ++i)
            t.cells.back().push_back(f[i].empty() ? std::nullopt
                                                  : std::optional<Rational>(Rational::parse(f[i])));
    }
    if (header) throw ParseError("table text has no header line");
    return t;
}

Table read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

std::vector<Mismatch> compare_tables(const Table& expected, const Table& actual) {
    std::vector<Mismatch> out;
    if (expected.corner != actual.corner || expected.columns != actual.columns)
        out.push_back({"header", "", expected.corner, actual.corner});
    if (expected.rows != actual.rows)
        out.push_back({"rows", "", std::to_string(expected.rows.size()),
                       std::to_string(actual.rows.size())});
    std::size_t nr = std::min(expected.rows.size(), actual.rows.size());
    for (std::size_t r = 0; r < nr; ++r) {
        std::size_t nc = std::min(expected.cells[r].size(), actual.cells[r].size());
        for (std::size_t c = 0; c < nc; ++c) {
            const auto& e = expected.cells[r][c];
            const auto& a = actual.cells[r][c];
            if (e.has_value() != a.has_value() || (e && *e != *a))
                out.push_back({expected.rows[r], expected.columns[c], e ? e->str() : "",
                               a ? a->str() : ""});
        }
    }
    return out;
}

}  // namespace winv
