#include "winv/complex_gw.hpp"

#include "winv/error.hpp"

#include <algorithm>
#include <numeric>

namespace winv {

namespace {

long total(const Tuple& m) { return std::accumulate(m.begin(), m.end(), 0L); }

Tuple with(Tuple m, std::initializer_list<long> extra) {
    m.insert(m.end(), extra);
    return m;
}

// <t>_d from the associativity relation traded at the third slot
Rational rt_relation(Session& s, long d, const Tuple& t) {
    const long t1 = t[0], t2 = t[1], m3 = t[2] - 1;
    Tuple tail(t.begin() + 3, t.end());

    Rational v = gw_p3(s, d, with(tail, {t1, t2 + 1, m3}));
    {
        Tuple m = {t1 + m3, t2};
        m.insert(m.end(), tail.begin(), tail.end());
        v += Rational(d) * gw_p3(s, d, m);
    }
    for (auto [d1, d2] : degree_splits(d)) {
        for_each_multiset_split(tail, [&](const Tuple& in, const Tuple& out, long mult) {
            for (long i = 1; i <= 2; ++i) {
                long j = 3 - i;
                // P_{3;2}: {1,3} | {2}
                Tuple a = with(in, {t1, m3, i}), b = with(out, {t2, j});
                Tuple c = with(in, {t1, t2, i}), e = with(out, {m3, j});
                Rational term;
                if (total(a) == 4 * d1 + static_cast<long>(a.size()) &&
                    total(b) == 4 * d2 + static_cast<long>(b.size()))
                    term += gw_p3(s, d1, a) * gw_p3(s, d2, b);
                if (total(c) == 4 * d1 + static_cast<long>(c.size()) &&
                    total(e) == 4 * d2 + static_cast<long>(e.size()))
                    term -= gw_p3(s, d1, c) * gw_p3(s, d2, e);
                if (!term.is_zero()) v += Rational(mult * d2) * term;
            }
        });
    }
    return v;
}

}  // namespace

Rational gw_p3(Session& s, long d, Tuple m) {
    if (d < 1) throw SchedulingError("gw_p3 at d=" + std::to_string(d));
    Rational factor = 1;
    Tuple t;
    for (long x : m) {
        if (x <= 0 || x >= 4) return 0;
        if (x == 1)
            factor *= Rational(d);
        else
            t.push_back(x);
    }
    std::sort(t.begin(), t.end(), std::greater<>());
    if (total(t) != 4 * d + static_cast<long>(t.size())) return 0;
    if (t.size() <= 2) return (d == 1 && t == Tuple{3, 3}) ? factor : Rational(0);
    Rational v = s.memo_integral("P3||d=" + std::to_string(d) + "|m=" + join(t),
                        [&] { return rt_relation(s, d, t); });
    return factor * v;
}

}  // namespace winv
