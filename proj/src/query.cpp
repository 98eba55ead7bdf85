#include "winv/query.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"
#include "winv/real_fourfold.hpp"
#include "winv/real_sixfold.hpp"

#include <algorithm>
#include <map>

namespace winv {
namespace {

const std::map<std::string, Space>& spaces() {
    static const std::map<std::string, Space> m = {
        {"p2", Space::P2}, {"p1p1", Space::P1P1}, {"blowup", Space::Blowup},
        {"p3", Space::P3}, {"p1cubed", Space::P1Cubed},
    };
    return m;
}

// accepted spellings per space, mapped to the name used in keys
std::string normalize_involution(Space sp, const std::string& inv) {
    if (inv.empty() || inv == "complex") return "";
    static const std::map<std::pair<Space, std::string>, std::string> m = {
        {{Space::P2, "tau2"}, "tau2"},
        {{Space::P1P1, "twisted"}, "twisted"},
        {{Space::P1P1, "tau'"}, "twisted"},
        {{Space::P1P1, "product"}, "product"},
        {{Space::P1P1, "tau11"}, "product"},
        {{Space::Blowup, "real"}, "real"},
        {{Space::P3, "tau3"}, "tau3"},
        {{Space::P1Cubed, "phi3"}, "phi3"},
        {{Space::P1Cubed, "phi3'"}, "phi3'"},
        {{Space::P1Cubed, "phi3p"}, "phi3'"},
    };
    auto it = m.find({sp, inv});
    if (it == m.end()) throw UsageError("involution '" + inv + "' does not apply to " + space_name(sp));
    return it->second;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

long digit(char c, long hi, const std::string& tok) {
    require(c >= '0' && c <= '0' + hi, "bad insertion '" + tok + "'");
    return c - '0';
}

Vec3 cube_insertion(const std::string& tok) {
    require(tok.size() == 3, "(P1)^3 insertions are three digits, got '" + tok + "'");
    return {digit(tok[0], 1, tok), digit(tok[1], 1, tok), digit(tok[2], 1, tok)};
}

Pair2 half_insertion(const std::string& tok) {
    require(tok.size() == 2, "twisted insertions are two digits, got '" + tok + "'");
    return {digit(tok[0], 2, tok), digit(tok[1], 1, tok)};
}

long codim(const std::string& tok) {
    require(tok.size() == 1, "P3 insertions are codimensions 0..3, got '" + tok + "'");
    return digit(tok[0], 3, tok);
}

std::vector<Vec3> cube_list(const Query& q) {
    std::vector<Vec3> m;
    for (const auto& t : q.insertions) m.push_back(cube_insertion(t));
    return m;
}

std::vector<Pair2> half_list(const Query& q) {
    std::vector<Pair2> m;
    for (const auto& t : q.insertions) m.push_back(half_insertion(t));
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

Tuple codim_list(const Query& q) {
    Tuple m;
    for (const auto& t : q.insertions) m.push_back(codim(t));
    return sorted_desc(m);
}

std::string join_vecs(const std::vector<Vec3>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + vec_str(m[i]);
    return s;
}

bool fourfold(Space s) { return s == Space::P2 || s == Space::P1P1 || s == Space::Blowup; }

}  // namespace

Space parse_space(const std::string& name) {
    auto it = spaces().find(name);
    if (it == spaces().end()) throw UsageError("unknown space '" + name + "'");
    return it->second;
}

std::string space_name(Space s) {
    for (const auto& [n, v] : spaces())
        if (v == s) return n;
    return "?";
}

void validate(Query& q) {
    q.involution = normalize_involution(q.space, q.involution);
    const bool real = !q.involution.empty();
    for (long x : q.degree) require(x >= 0, "degrees must be nonnegative");
    for (long x : q.a) require(x >= 0, "multiplicities must be nonnegative");
    for (long x : q.b) require(x >= 0, "multiplicities must be nonnegative");
    require(q.pairs >= 0, "the number of point pairs must be nonnegative");
    require(q.pairs == 0 || (real && fourfold(q.space)),
            "-l applies only to real invariants of P2, P1xP1 and blowups");
    require(q.insertions.empty() || !fourfold(q.space),
            "insertions apply only to P3 and (P1)^3; point constraints on surfaces are implicit");
    require((q.a.empty() && q.b.empty()) || q.space == Space::Blowup,
            "multiplicities apply only to blowups");
    require(q.b.empty() || real, "complex blowups take all multiplicities through --a");

    std::size_t want = 1;
    if (q.space == Space::P1P1 && q.involution != "twisted") want = q.degree.size() == 1 ? 1 : 2;
    if (q.space == Space::P1Cubed) want = q.involution == "phi3'" ? 2 : 3;
    require(q.degree.size() == want, space_name(q.space) + (real ? " " + q.involution : "") +
                                         " takes a class of " + std::to_string(want) + " entries");
    if (q.space == Space::P1P1 && q.degree.size() == 1 && q.involution != "twisted")
        q.degree.push_back(q.degree[0]);
    require(q.space == Space::P1Cubed || q.degree[0] >= 1 || q.space == Space::P1P1,
            "the degree must be positive");

    // parse once so malformed tokens surface as usage errors
    if (q.space == Space::P3) codim_list(q);
    if (q.space == Space::P1Cubed) {
        if (q.involution == "phi3'")
            half_list(q);
        else
            cube_list(q);
        long n = 0;
        for (long x : q.degree) n += x;
        require(n > 0, "the class must be nonzero");
    }
}

std::string canonical_key(const Query& q) {
    const std::string& inv = q.involution;
    const Tuple& d = q.degree;
    switch (q.space) {
    case Space::P2:
        return "P2|" + inv + "|d=" + std::to_string(d[0]) + (inv.empty() ? "" : "|l=" + std::to_string(q.pairs));
    case Space::P1P1:
        if (inv == "twisted")
            return "P1xP1|tau'|d=" + std::to_string(d[0]) + "|l=" + std::to_string(q.pairs);
        {
            long lo = std::min(d[0], d[1]), hi = std::max(d[0], d[1]);
            std::string k = "P1xP1|" + std::string(inv.empty() ? "" : "tau11") + "|a=" + std::to_string(lo) +
                            ",b=" + std::to_string(hi);
            return inv.empty() ? k : k + "|l=" + std::to_string(q.pairs);
        }
    case Space::Blowup:
        if (inv.empty())
            return "BL(" + std::to_string(q.a.size()) + ")||" + std::to_string(d[0]) + ";" + join(sorted_desc(q.a));
        return "BL(" + std::to_string(q.a.size()) + "," + std::to_string(q.b.size()) + ")|real|" +
               std::to_string(d[0]) + ";" + join(sorted_desc(q.a)) + ";" + join(sorted_desc(q.b)) +
               "|l=" + std::to_string(q.pairs);
    case Space::P3:
        return "P3|" + inv + "|d=" + std::to_string(d[0]) + "|m=" + join(codim_list(q));
    case Space::P1Cubed:
        if (inv == "phi3'") {
            std::string s;
            auto m = half_list(q);
            for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + pair_str(m[i]);
            return "P1^3|phi3'|" + join(d) + "|m=" + s;
        } else {
            auto [cd, cm] = canonical_p1cubed({d[0], d[1], d[2]}, cube_list(q));
            return "P1^3|" + inv + "|" + join(Tuple(cd.begin(), cd.end())) + "|m=" + join_vecs(cm);
        }
    }
    return {};
}

Rational evaluate(Session& s, const Query& q) {
    const std::string& inv = q.involution;
    const Tuple& d = q.degree;
    switch (q.space) {
    case Space::P2:
        return inv.empty() ? gw_p2(s, d[0]) : wel_p2(s, d[0], q.pairs);
    case Space::P1P1:
        if (inv == "twisted") return wel_twisted(s, d[0], q.pairs);
        return inv.empty() ? gw_p1p1(s, d[0], d[1]) : wel_product(s, d[0], d[1], q.pairs);
    case Space::Blowup:
        if (inv.empty()) return gw_blowup(s, {d[0], q.a});
        return wel_blowup(s, {d[0], q.a, q.b}, q.pairs);
    case Space::P3:
        return inv.empty() ? gw_p3(s, d[0], codim_list(q)) : rgw_p3(s, d[0], codim_list(q));
    case Space::P1Cubed:
        if (inv == "phi3'") return rgw_twisted(s, {d[0], d[1]}, half_list(q));
        if (inv.empty()) return gw_p1cubed(s, {d[0], d[1], d[2]}, cube_list(q));
        return rgw_product(s, {d[0], d[1], d[2]}, cube_list(q));
    }
    throw UsageError("unknown space");
}

nlohmann::json to_json(const Query& q, const Rational& value) {
    nlohmann::json cls;
    if (q.space == Space::Blowup) {
        cls["d"] = q.degree[0];
        cls["a"] = q.a;
        if (!q.involution.empty()) cls["b"] = q.b;
    } else {
        cls = q.degree;
    }
    return {
        {"space", space_name(q.space)},
        {"involution", q.involution.empty() ? nlohmann::json() : nlohmann::json(q.involution)},
        {"class", cls},
        {"insertions", q.insertions},
        {"pairs", q.pairs},
        {"value", value.str()},
        {"key", canonical_key(q)},
    };
}

}  // namespace winv
