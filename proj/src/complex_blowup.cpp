#include "winv/complex_gw.hpp"

#include "winv/error.hpp"

#include <algorithm>
#include <numeric>

namespace winv {

namespace {

Rational blowup_wdvv(Session& s, const BlowupClass& v, std::size_t i) {
    const long d = v.d;
    const long ci = v.c[i];
    const long ell = ell_blowup(v);
    Tuple w = v.c;
    --w[i];

    Rational rhs = Rational(d * d - (ci - 1) * (ci - 1)) * gw_blowup(s, {d, w});

    const long wsum = std::accumulate(w.begin(), w.end(), 0L);
    for (auto [d1, d2] : degree_splits(d)) {
        for_each_box(w, [&](const Tuple& x) {
            long xs = std::accumulate(x.begin(), x.end(), 0L);
            long ell1 = 3 * d1 - 1 - xs;
            long ell2 = 3 * d2 - 1 - (wsum - xs);
            if (ell1 < 0 || ell2 < 0) return;
            long xi = x[i], yi = w[i] - x[i];
            long coef = d1 * d2 * xi * yi - d1 * d1 * yi * yi;
            if (coef == 0) return;
            long pairing = d1 * d2;
            for (std::size_t j = 0; j < x.size(); ++j) pairing -= x[j] * (w[j] - x[j]);
            if (pairing == 0) return;
            Tuple y(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) y[j] = w[j] - x[j];
            Rational n1 = gw_blowup(s, {d1, x});
            if (n1.is_zero()) return;
            Rational n2 = gw_blowup(s, {d2, y});
            if (n2.is_zero()) return;
            rhs += Rational(pairing * coef) * binom(ell, ell1) * n1 * n2;
        });
    }
    return exact_div(rhs, Rational(d * d * ci), "blowup recursion");
}

}  // namespace

Rational gw_blowup(Session& s, BlowupClass v) {
    if (v.d == 0) {
        // exceptional curves E_i
        long minus = std::count(v.c.begin(), v.c.end(), -1L);
        long zero = std::count(v.c.begin(), v.c.end(), 0L);
        return (minus == 1 && zero + 1 == static_cast<long>(v.c.size())) ? 1 : 0;
    }
    if (v.d < 0) return 0;
    for (long x : v.c)
        if (x < 0) return 0;
    if (ell_blowup(v) < 0) return 0;

    Tuple c;
    for (long x : v.c)
        if (x >= 2) c.push_back(x);
    std::sort(c.begin(), c.end(), std::greater<>());
    // entries 0 and 1 drop out once ell >= 0
    if (c.empty()) return gw_p2(s, v.d);
    if (s.options().effectiveness_filter && !is_effective_blowup(v.d, c)) return 0;

    BlowupClass w{v.d, std::move(c)};
    std::string key =
        "BL(" + std::to_string(w.c.size()) + ")||" + std::to_string(w.d) + ";" + join(w.c);
    return s.memo_integral(key, [&] {
        std::size_t i = s.options().blowup_pivot == Pivot::Largest ? 0 : w.c.size() - 1;
        return blowup_wdvv(s, w, i);
    });
}

}  // namespace winv
