#include "winv/real_sixfold.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"

#include <algorithm>

namespace winv {

namespace {

Tuple cat(std::initializer_list<long> head, const Tuple& rest) {
    Tuple t(head);
    t.insert(t.end(), rest.begin(), rest.end());
    return t;
}

Tuple plus(Tuple t, long x) {
    t.push_back(x);
    return t;
}

Rational by_real_point(Session& s, long d, const Tuple& t) {
    Tuple m = t;
    m[0] -= 1;
    const long km = k_p3(d, m);
    const long l = static_cast<long>(m.size());
    Tuple tail(m.begin() + 1, m.end());
    Rational v;
    if (d % 2 == 0 && km == 2) v -= pow2(l - 2) * Rational(d) * gw_p3(s, d / 2, plus(m, 3));

    for (long dp = 1; d - 2 * dp >= 1; ++dp) {
        long d0 = d - 2 * dp;
        for_each_multiset_split(tail, [&](const Tuple& in, const Tuple& out, long mult) {
            Tuple mi = cat({m[0]}, in);
            Rational acc;
            for (long i = 1; i <= 2; ++i) {
                Rational c = gw_p3(s, dp, plus(mi, i));
                if (c.is_zero()) continue;
                acc += c * rgw_p3(s, d0, cat({3 - i}, out));
            }
            if (!acc.is_zero())
                v -= Rational(dp * mult) * pow2(static_cast<long>(mi.size()) - 1) * acc;
        });
    }
    for (auto [d1, d2] : degree_splits(d))
        for_each_multiset_split(tail, [&](const Tuple& in, const Tuple& out, long mult) {
            Tuple mi = cat({m[0]}, in);
            long ki = k_p3(d1, mi);
            Rational c = Rational(d2) * binom(km - 2, ki - 1) - Rational(d1) * binom(km - 2, ki);
            if (c.is_zero()) return;
            Rational a = rgw_p3(s, d1, mi);
            if (a.is_zero()) return;
            v += Rational(mult) * c * a * rgw_p3(s, d2, out);
        });
    return v;
}

Rational by_pairs(Session& s, long d, const Tuple& t) {
    Tuple m = t;
    m[1] -= 1;
    const long km = k_p3(d, m);
    Tuple tail(m.begin() + 2, m.end());
    Rational v = rgw_p3(s, d, cat({m[0] + 1, m[1]}, tail));

    for (long dp = 1; d - 2 * dp >= 1; ++dp) {
        long d0 = d - 2 * dp;
        for_each_multiset_split(tail, [&](const Tuple& in, const Tuple& out, long mult) {
            Tuple mi = cat({m[0]}, in), mj = cat({m[1]}, out);
            Rational acc;
            for (long i = 1; i <= 2; ++i) {
                long j = 3 - i;
                acc += pow2(static_cast<long>(mi.size()) - 1) * gw_p3(s, dp, plus(mi, i)) *
                       rgw_p3(s, d0, plus(mj, j));
                acc -= pow2(static_cast<long>(mj.size()) - 1) * gw_p3(s, dp, plus(mj, j)) *
                       rgw_p3(s, d0, plus(mi, i));
            }
            if (!acc.is_zero()) v += Rational(dp * mult) * acc;
        });
    }
    for (auto [d1, d2] : degree_splits(d))
        for_each_multiset_split(tail, [&](const Tuple& in, const Tuple& out, long mult) {
            Tuple mi = cat({m[0]}, in), mj = cat({m[1]}, out);
            Rational c = Rational(d1) * binom(km - 1, k_p3(d1, mi)) -
                         Rational(d2) * binom(km - 1, k_p3(d2, mj));
            if (c.is_zero()) return;
            Rational a = rgw_p3(s, d1, mi);
            if (a.is_zero()) return;
            v += Rational(mult) * c * a * rgw_p3(s, d2, mj);
        });
    return v;
}

Rational no_insertions(Session& s, long d) {
    Rational v;
    for (auto [d1, d2] : degree_splits(d)) {
        v += Rational(d2) * binom(2 * d - 1, 2 * d1) * rgw_p3(s, d1 + 1, {3}) * rgw_p3(s, d2, {});
        Rational c = Rational(2 * d2 - d1 - 1, 2 * d2 - 1) * binom(2 * d - 2, 2 * d1);
        if (c.is_zero()) continue;
        v += c * (rgw_p3(s, d1 + 1, {2, 2}) * rgw_p3(s, d2, {}) -
                  rgw_p3(s, d1 + 1, {2}) * rgw_p3(s, d2, {2}));
    }
    return exact_div(v, Rational(d + 1), "P3 real, no insertions");
}

Rational p3_dispatch(Session& s, long d, const Tuple& t, long k) {
    if (t.empty()) return no_insertions(s, d);
    bool second = t.size() >= 2 && t[1] >= 2;
    if (k >= 1 && !(second && s.options().sixfold_prefer_alt)) return by_real_point(s, d, t);
    if (second) return by_pairs(s, d, t);
    throw SchedulingError("no P3 relation applies at " + std::to_string(d) + ";" + join(t));
}

}  // namespace

Rational rgw_p3(Session& s, long d, Tuple m) {
    if (d < 1) throw SchedulingError("rgw_p3 at degree " + std::to_string(d));
    Rational factor = 1;
    Tuple t;
    for (long x : m) {
        if (x <= 0 || x >= 4) return 0;
        if (x == 1)
            factor *= Rational(d);
        else
            t.push_back(x);
    }
    const long k = k_p3(d, t);
    if (k < 0) return 0;
    if (s.options().parity_shortcut && (d - k) % 2 == 0) return 0;
    std::sort(t.begin(), t.end(), std::greater<>());
    if (d == 1 && t.empty()) return factor;
    if (d == 1 && t == Tuple{3}) return -factor;

    std::string key = "P3|tau3|d=" + std::to_string(d) + "|m=" + join(t);
    return factor * s.memo(key, [&] {
        Rational v = p3_dispatch(s, d, t, k);
        if ((d - k) % 2 == 0 && !v.is_zero())
            throw ArithmeticError("parity-forbidden nonzero value " + v.str() + " at " + key);
        return v;
    });
}

}  // namespace winv
