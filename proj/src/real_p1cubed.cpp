#include "winv/real_sixfold.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"
#include "winv/real_fourfold.hpp"

#include <algorithm>

namespace winv {

namespace {

template <class V>
std::vector<V> cat(std::initializer_list<V> head, const std::vector<V>& rest) {
    std::vector<V> t(head);
    t.insert(t.end(), rest.begin(), rest.end());
    return t;
}

template <class V>
std::vector<V> plus(std::vector<V> t, const V& x) {
    t.push_back(x);
    return t;
}

// sign applied to fixed inputs when the k = 3 mod 4 flip is on
Rational flipped(const Session& s, long k, Rational v) {
    if (s.options().flip_k3mod4 && k % 4 == 3) return -v;
    return v;
}

Rational parity_guard(Rational v, long k, const std::string& key) {
    if (k % 2 == 0 && !v.is_zero())
        throw ArithmeticError("parity-forbidden nonzero value " + v.str() + " at " + key);
    return v;
}

// ---- product involution ----

constexpr Vec3 kOne{1, 1, 1};

Vec3 sub3(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }

// closed form when d3 is 0 or 1; false when the generic recursion is needed
bool product_fiber(Session& s, const Vec3& d, const std::vector<Vec3>& t, Rational& out) {
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
    const long n = d[0] + d[1];
    out = 0;
    if (d[2] == 0) {
        if (a1 == 0 && a2 == 0 && b == 0 && a3 == n - 1) out = wel_product(s, d[0], d[1], n - 1);
        return true;
    }
    const long q = n + 1 + a1 + a2 - a3;
    if (q <= 2) return true;
    if (q > 3) return false;
    if (a1 == 0 && a2 == 0 && b == 0 && a3 == n - 2)
        out = -wel_product(s, d[0], d[1], n - 2);
    else if (a1 == 0 && a2 == 0 && b == 1 && a3 == n - 2)
        out = wel_product(s, d[0], d[1], n - 1);
    else if (a1 == 1 && a2 == 0 && b == 0 && a3 == n - 1)
        out = Rational(d[1]) * wel_product(s, d[0], d[1], n - 1);
    else if (a1 == 0 && a2 == 1 && b == 0 && a3 == n - 1)
        out = Rational(d[0]) * wel_product(s, d[0], d[1], n - 1);
    return true;
}

const std::vector<Vec3>& parts3() {
    static const std::vector<Vec3> p = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                        {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    return p;
}

Rational product_insertions(Session& s, const Vec3& d, const std::vector<Vec3>& t) {
    const Vec3 t1 = t[0];
    int r = -1;
    for (int q = 0; q < 3 && r < 0; ++q)
        if (t1[q] == 1 && d[q] > 0) r = q;
    for (int q = 0; q < 3 && r < 0; ++q)
        if (t1[q] == 1) r = q;
    Vec3 er{0, 0, 0};
    er[r] = 1;
    std::vector<Vec3> m = t;
    m[0] = sub3(t1, er);
    const long km = k_p1cubed(d, m);
    const long l = static_cast<long>(m.size());
    std::vector<Vec3> tail(m.begin() + 1, m.end());
    Rational v;

    if (km == 2 && d[0] % 2 == 0 && d[1] % 2 == 0 && d[2] % 2 == 0)
        v -= pow2(l - 2) * Rational(d[r]) * gw_p1cubed(s, {d[0] / 2, d[1] / 2, d[2] / 2}, plus(m, kOne));

    Tuple half{d[0] / 2, d[1] / 2, d[2] / 2};
    for_each_box(half, [&](const Tuple& x) {
        Vec3 dp{x[0], x[1], x[2]};
        Vec3 dpp{d[0] - 2 * x[0], d[1] - 2 * x[1], d[2] - 2 * x[2]};
        if (norm(dp) == 0 || norm(dpp) == 0 || dp[r] == 0) return;
        for_each_multiset_split(tail, [&](const std::vector<Vec3>& in, const std::vector<Vec3>& out,
                                          long mult) {
            auto mi = cat({m[0]}, in);
            Rational acc;
            for (const auto& i : parts3()) {
                Rational c = gw_p1cubed(s, dp, plus(mi, i));
                if (c.is_zero()) continue;
                acc += c * rgw_product(s, dpp, cat({sub3(kOne, i)}, out));
            }
            if (!acc.is_zero())
                v -= Rational(dp[r] * mult) * pow2(static_cast<long>(mi.size()) - 1) * acc;
        });
    });

    Tuple full(d.begin(), d.end());
    for_each_box(full, [&](const Tuple& x) {
        Vec3 dp{x[0], x[1], x[2]};
        Vec3 dpp = sub3(d, dp);
        if (norm(dp) == 0 || norm(dpp) == 0) return;
        for_each_multiset_split(tail, [&](const std::vector<Vec3>& in, const std::vector<Vec3>& out,
                                          long mult) {
            auto mi = cat({m[0]}, in);
            long ki = k_p1cubed(dp, mi);
            Rational c = Rational(dpp[r]) * binom(km - 2, ki - 1) - Rational(dp[r]) * binom(km - 2, ki);
            if (c.is_zero()) return;
            Rational a = rgw_product(s, dp, mi);
            if (a.is_zero()) return;
            v += Rational(mult) * c * a * rgw_product(s, dpp, out);
        });
    });
    return v;
}

Rational product_empty(Session& s, const Vec3& d) {
    const long n = norm(d);
    for (int r = 0; r < 3; ++r) {
        long lead = n - 1 - 2 * d[r];
        if (lead == 0) continue;
        Vec3 up = d;
        up[r] += 1;
        Rational v;
        Tuple full(up.begin(), up.end());
        for_each_box(full, [&](const Tuple& x) {
            Vec3 dp{x[0], x[1], x[2]};
            Vec3 dpp = sub3(up, dp);
            if (norm(dp) < 2 || norm(dpp) < 2 || dp[r] == 0) return;
            Rational c = Rational(dpp[r]) * binom(n - 1, norm(dp) - 1) -
                         Rational(dp[r]) * binom(n - 1, norm(dp));
            if (c.is_zero()) return;
            v += Rational(dp[r]) * c * rgw_product(s, dp, {}) * rgw_product(s, dpp, {});
        });
        return exact_div(v, Rational(lead), "product sixfold, no insertions");
    }
    throw SchedulingError("no relation for empty product invariant at " + vec_str(d));
}

// ---- twisted involution ----

Pair2 sub2(const Pair2& x, const Pair2& y) { return {x[0] - y[0], x[1] - y[1]}; }

bool twisted_fiber(Session& s, const Pair2& d, const std::vector<Pair2>& t, Rational& out) {
    long n11 = 0, n20 = 0, n21 = 0;
    for (const auto& x : t) {
        if (x == Pair2{1, 1})
            ++n11;
        else if (x == Pair2{2, 0})
            ++n20;
        else
            ++n21;
    }
    const long a = d[0];
    const Rational scale = pow2(-n20 - n21);
    const Rational sg = Rational(sign_pow(a));
    out = 0;
    if (d[1] == 0) {
        if (n11 == 0 && n21 == 0 && n20 == 2 * a - 1) out = scale * sg * wel_twisted(s, a, 2 * a - 1);
        return true;
    }
    const long q = 2 * a + 1 + n11 - n20;
    if (q <= 2) return true;
    if (q > 3) return false;
    if (n11 == 0 && n21 == 0 && n20 == 2 * a - 2)
        out = -scale * sg * wel_twisted(s, a, 2 * a - 2);
    else if (n11 == 0 && n21 == 1 && n20 == 2 * a - 2)
        out = scale * sg * wel_twisted(s, a, 2 * a - 1);
    else if (n11 == 1 && n21 == 0 && n20 == 2 * a - 1)
        out = scale * sg * Rational(a) * wel_twisted(s, a, 2 * a - 1);
    return true;
}

const std::vector<std::pair<Pair2, Pair2>>& parts2() {
    static const std::vector<std::pair<Pair2, Pair2>> p = {
        {{1, 0}, {1, 1}}, {{2, 0}, {0, 1}}, {{0, 1}, {2, 0}}, {{1, 1}, {1, 0}}};
    return p;
}

Rational twisted_insertions(Session& s, const Pair2& d, const std::vector<Pair2>& t) {
    const Pair2 t1 = t[0];
    int r = -1;
    for (int q = 0; q < 2 && r < 0; ++q)
        if (t1[q] >= 1 && d[q] > 0) r = q;
    for (int q = 0; q < 2 && r < 0; ++q)
        if (t1[q] >= 1) r = q;
    Pair2 er{0, 0};
    er[r] = 1;
    std::vector<Pair2> m = t;
    m[0] = sub2(t1, er);
    const long km = k_twisted(d, m);
    const long l = static_cast<long>(m.size());
    std::vector<Pair2> tail(m.begin() + 1, m.end());
    Rational v;

    if (km == 2) v -= pow2(l - 1) * Rational(d[r]) * gw_p1cubed_halfbasis(s, d, plus(m, Pair2{2, 1}));

    Tuple full(d.begin(), d.end());
    for_each_box(full, [&](const Tuple& x) {
        Pair2 dp{x[0], x[1]};
        Pair2 dpp = sub2(d, dp);
        if (norm(dp) == 0 || norm(dpp) == 0) return;
        for_each_multiset_split(tail, [&](const std::vector<Pair2>& in, const std::vector<Pair2>& out,
                                          long mult) {
            auto mi = cat({m[0]}, in);
            if (dp[r] != 0) {
                Rational acc;
                for (const auto& [i, j] : parts2()) {
                    Rational c = gw_p1cubed_halfbasis(s, dp, plus(mi, i));
                    if (c.is_zero()) continue;
                    acc += c * rgw_twisted(s, dpp, cat({j}, out));
                }
                if (!acc.is_zero())
                    v -= Rational(dp[r] * mult) * pow2(static_cast<long>(mi.size()) - 1) * acc;
            }
            long ki = k_twisted(dp, mi);
            Rational c = Rational(dpp[r]) * binom(km - 2, ki - 1) - Rational(dp[r]) * binom(km - 2, ki);
            if (c.is_zero()) return;
            Rational a = rgw_twisted(s, dp, mi);
            if (a.is_zero()) return;
            v += Rational(mult) * c * a * rgw_twisted(s, dpp, out);
        });
    });
    return v;
}

Rational twisted_empty(Session& s, const Pair2& d) {
    const long a = d[0], b = d[1];
    const long n = 2 * a + b - 1;
    if (2 * a - 1 - b != 0) {
        Rational v;
        for (long a1 = 1; a1 < a; ++a1)
            for (long b1 = 1; b1 <= b; ++b1) {
                long a2 = a - a1, b2 = b + 1 - b1;
                Rational c = Rational(b2) * binom(n, 2 * a1 + b1 - 1) - Rational(b1) * binom(n, 2 * a1 + b1);
                if (c.is_zero()) continue;
                v += Rational(b1) * c * rgw_twisted(s, {a1, b1}, {}) * rgw_twisted(s, {a2, b2}, {});
            }
        return exact_div(v, Rational(2 * a - 1 - b), "twisted sixfold, no insertions");
    }
    if (b != 1) {
        Rational v;
        for (long a1 = 1; a1 <= a; ++a1)
            for (long b1 = 1; b1 < b; ++b1) {
                long a2 = a + 1 - a1, b2 = b - b1;
                Rational c = Rational(a1) * binom(n, 2 * a1 + b1 - 1) - Rational(a2) * binom(n, 2 * a1 + b1 - 2);
                if (c.is_zero()) continue;
                v += c * Rational(2) * rgw_twisted(s, {a1, b1}, {Pair2{2, 0}}) * rgw_twisted(s, {a2, b2}, {});
            }
        return exact_div(v, Rational(b - 1), "twisted sixfold, no insertions");
    }
    throw SchedulingError("no relation for empty twisted invariant at " + pair_str(d));
}

}  // namespace

Rational rgw_product(Session& s, Vec3 d, std::vector<Vec3> m) {
    for (long x : d)
        if (x < 0) return 0;
    if (norm(d) == 0) throw SchedulingError("rgw_product at degree 0");
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
    const long k = k_p1cubed(d, t);
    if (k < 0) return 0;
    // k = 0 is out of reach of the relations; it vanishes with every even k
    if (k % 2 == 0 && (k == 0 || s.options().parity_shortcut)) return 0;
    auto [cd, ct] = canonical_p1cubed(d, std::move(t));

    if (ct.empty() && norm(cd) == 1) return factor;
    if (s.options().closed_forms) {
        // move a coordinate equal to 0 (else 1) to the last slot
        int pos = -1;
        for (int want = 0; want <= 1 && pos < 0; ++want)
            for (int r = 2; r >= 0 && pos < 0; --r)
                if (cd[r] == want) pos = r;
        if (pos >= 0) {
            Vec3 pd = cd;
            std::swap(pd[pos], pd[2]);
            std::vector<Vec3> pt = ct;
            for (auto& x : pt) std::swap(x[pos], x[2]);
            Rational v;
            if (product_fiber(s, pd, pt, v)) return factor * flipped(s, k, v);
        }
    }
    if (ct.empty() && cd == kOne) return factor * flipped(s, 3, -1);

    std::string key = "P1^3|phi3|" + join(Tuple(cd.begin(), cd.end())) + "|m=";
    for (std::size_t i = 0; i < ct.size(); ++i) key += (i ? "," : "") + vec_str(ct[i]);
    return factor * s.memo(key, [&] {
        Rational v = ct.empty() ? product_empty(s, cd) : product_insertions(s, cd, ct);
        return parity_guard(v, k, key);
    });
}

Rational rgw_twisted(Session& s, Pair2 d, std::vector<Pair2> m) {
    if (d[0] < 0 || d[1] < 0) return 0;
    if (norm(d) == 0) throw SchedulingError("rgw_twisted at degree 0");
    Rational factor = 1;
    std::vector<Pair2> t;
    for (const auto& x : m) {
        if (x[0] < 0 || x[1] < 0 || x[0] > 2 || x[1] > 1 || norm(x) == 0) return 0;
        if (norm(x) == 1)
            factor *= Rational(x[0] == 1 ? d[0] : d[1]);
        else
            t.push_back(x);
        if (factor.is_zero()) return 0;
    }
    const long k = k_twisted(d, t);
    if (k < 0) return 0;
    if (k % 2 == 0 && (k == 0 || s.options().parity_shortcut)) return 0;
    if (d[0] == 0) return (d[1] == 1 && t.empty()) ? factor : Rational(0);
    std::sort(t.begin(), t.end(), std::greater<>());

    if (s.options().closed_forms && d[1] <= 1) {
        Rational v;
        if (twisted_fiber(s, d, t, v)) return factor * flipped(s, k, v);
    }
    if (t.empty() && d == Pair2{1, 1}) return factor * flipped(s, 3, 1);

    std::string key = "P1^3|phi3'|" + join(Tuple(d.begin(), d.end())) + "|m=";
    for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + pair_str(t[i]);
    return factor * s.memo(key, [&] {
        Rational v = t.empty() ? twisted_empty(s, d) : twisted_insertions(s, d, t);
        return parity_guard(v, k, key);
    });
}

}  // namespace winv
