#include "winv/complex_gw.hpp"

#include "winv/error.hpp"

#include <algorithm>

namespace winv {

namespace {

constexpr Vec3 kOne{1, 1, 1};

long total(const std::vector<Vec3>& m) {
    long t = 0;
    for (const auto& x : m) t += norm(x);
    return t;
}

bool balanced(const Vec3& d, const std::vector<Vec3>& m) {
    return total(m) == 2 * norm(d) + static_cast<long>(m.size());
}

std::vector<Vec3> with(std::vector<Vec3> m, std::initializer_list<Vec3> extra) {
    m.insert(m.end(), extra);
    return m;
}

Vec3 add(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vec3 sub(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Vec3 unit(int r) {
    Vec3 e{0, 0, 0};
    e[r] = 1;
    return e;
}

// nonzero i, j with i + j = (1,1,1)
const std::vector<Vec3>& proper_parts() {
    static const std::vector<Vec3> parts = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                            {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    return parts;
}

Rational wdvv(Session& s, const Vec3& d, const std::vector<Vec3>& t) {
    const Vec3 t1 = t[0], t2 = t[1], t3 = t[2];
    int r = -1;
    for (int q = 0; q < 3; ++q)
        if (t3[q] == 1 && t2[q] == 1) {
            r = q;
            break;
        }
    if (r < 0)
        for (int q = 0; q < 3; ++q)
            if (t3[q] == 1) {
                r = q;
                break;
            }
    if (r < 0) throw SchedulingError("no trade coordinate for (P1)^3 WDVV");
    const Vec3 er = unit(r);
    const Vec3 m3 = sub(t3, er);
    std::vector<Vec3> tail(t.begin() + 3, t.end());

    Rational v;
    if (t2[r] == 0) v += gw_p1cubed(s, d, with(tail, {t1, add(t2, er), m3}));
    if (d[r] != 0) v += Rational(d[r]) * gw_p1cubed(s, d, with(tail, {add(t1, m3), t2}));

    Tuple upper(d.begin(), d.end());
    for_each_box(upper, [&](const Tuple& x) {
        Vec3 d1{x[0], x[1], x[2]};
        Vec3 d2 = sub(d, d1);
        if (norm(d1) == 0 || norm(d2) == 0 || d2[r] == 0) return;
        for_each_multiset_split(tail, [&](const std::vector<Vec3>& in,
                                          const std::vector<Vec3>& out, long mult) {
            Rational acc;
            for (const auto& i : proper_parts()) {
                Vec3 j = sub(kOne, i);
                auto a = with(in, {t1, m3, i}), b = with(out, {t2, j});
                if (balanced(d1, a) && balanced(d2, b))
                    acc += gw_p1cubed(s, d1, a) * gw_p1cubed(s, d2, b);
                auto c = with(in, {t1, t2, i}), e = with(out, {m3, j});
                if (balanced(d1, c) && balanced(d2, e))
                    acc -= gw_p1cubed(s, d1, c) * gw_p1cubed(s, d2, e);
            }
            if (!acc.is_zero()) v += Rational(mult * d2[r]) * acc;
        });
    });
    return v;
}

// classes with a coordinate 0 or 1 reduce to P1xP1; returns false when no form applies
bool fiber_form(Session& s, const Vec3& d, const std::vector<Vec3>& t, Rational& out) {
    long a1 = 0, a2 = 0, a3 = 0, b = 0;
    for (const auto& x : t) {
        if (x == kOne)
            ++b;
        else if (x[0] == 0)
            ++a1;
        else if (x[1] == 0)
            ++a2;
        else
            ++a3;
    }
    (void)a3;
    if (d[2] == 0) {
        if (a1 + a2 + b != 1) {
            out = 0;
        } else {
            Rational n = gw_p1p1(s, d[0], d[1]);
            out = b == 1 ? n : (a1 == 1 ? Rational(d[1]) * n : Rational(d[0]) * n);
        }
        return true;
    }
    if (d[2] == 1) {
        long c = a1 + a2 + b;
        if (c < 3) {
            out = 0;
            return true;
        }
        if (c == 3) {
            Integer f = 1;
            for (long q = 0; q < a2; ++q) f *= d[0];
            for (long q = 0; q < a1; ++q) f *= d[1];
            out = Rational(f) * gw_p1p1(s, d[0], d[1]);
            return true;
        }
    }
    return false;
}

}  // namespace

Rational gw_p1cubed(Session& s, Vec3 d, std::vector<Vec3> m) {
    for (long x : d)
        if (x < 0) return 0;
    if (norm(d) == 0) throw SchedulingError("gw_p1cubed at degree 0");
    Rational factor = 1;
    std::vector<Vec3> t;
    for (const auto& x : m) {
        for (long c : x)
            if (c < 0 || c > 1) return 0;
        long n = norm(x);
        if (n == 0) return 0;
        if (n == 1) {
            for (int r = 0; r < 3; ++r)
                if (x[r]) factor *= Rational(d[r]);
            if (factor.is_zero()) return 0;
        } else {
            t.push_back(x);
        }
    }
    if (!balanced(d, t)) return 0;
    auto [cd, ct] = canonical_p1cubed(d, std::move(t));

    Rational fiber;
    bool small = ct.size() < 3;
    if ((s.options().closed_forms || small) && fiber_form(s, cd, ct, fiber)) return factor * fiber;
    if (small) return 0;

    std::string key = "P1^3||" + join(Tuple(cd.begin(), cd.end())) + "|m=";
    for (std::size_t i = 0; i < ct.size(); ++i) key += (i ? "," : "") + vec_str(ct[i]);
    return factor * s.memo_integral(key, [&] { return wdvv(s, cd, ct); });
}

Rational gw_p1cubed_halfbasis(Session& s, Pair2 d, std::vector<Pair2> m) {
    if (d[0] < 0 || d[1] < 0 || norm(d) == 0) return 0;
    if (d[1] % 2 != 0) return 0;
    std::sort(m.begin(), m.end(), std::greater<>());
    for (const auto& x : m)
        if (x[0] < 0 || x[1] < 0 || x[0] > 2 || x[1] > 1 || norm(x) == 0) return 0;

    std::string key = "P1^3|half|" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "|m=";
    for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + pair_str(m[i]);
    return s.memo(key, [&] {
        // H1' = (H1+H2)/2, H1'^2 = H1H2/2, H2' = H3
        std::vector<std::vector<std::pair<Rational, Vec3>>> expand;
        for (const auto& x : m) {
            std::vector<std::pair<Rational, Vec3>> terms;
            Rational half(1, 2);
            if (x[0] == 0) terms.push_back({1, {0, 0, 1}});
            if (x[0] == 1) {
                terms.push_back({half, {1, 0, x[1]}});
                terms.push_back({half, {0, 1, x[1]}});
            }
            if (x[0] == 2) terms.push_back({half, {1, 1, x[1]}});
            expand.push_back(std::move(terms));
        }
        Tuple upper;
        for (const auto& e : expand) upper.push_back(static_cast<long>(e.size()) - 1);
        Rational sum;
        for (long a1 = 0; a1 <= d[0]; ++a1) {
            Vec3 deg{a1, d[0] - a1, d[1] / 2};
            if (norm(deg) == 0) continue;
            for_each_box(upper, [&](const Tuple& pick) {
                Rational coef = 1;
                std::vector<Vec3> ins;
                for (std::size_t q = 0; q < expand.size(); ++q) {
                    coef *= expand[q][pick[q]].first;
                    ins.push_back(expand[q][pick[q]].second);
                }
                sum += coef * gw_p1cubed(s, deg, ins);
            });
        }
        return sum;
    });
}

}  // namespace winv
