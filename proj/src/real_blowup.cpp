#include "winv/real_fourfold.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"

#include <algorithm>
#include <numeric>

namespace winv {

namespace {

enum class Field { R, C };

long sum(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0L); }

// <v, e_i^F>
long pairing_e(const RealBlowupClass& v, Field f, std::size_t i) {
    return f == Field::R ? v.a[i] : 2 * v.b[i];
}

Rational eval(Session& s, RealBlowupClass v);

std::string key_of(const RealBlowupClass& v) {
    return "BL(" + std::to_string(v.a.size()) + "," + std::to_string(v.b.size()) + ")|real|" +
           std::to_string(v.d) + ";" + join(v.a) + ";" + join(v.b) + "|l=0";
}

Rational doubled_sum(Session& s, const RealBlowupClass& w) {
    Rational t;
    for (const auto& c : doubling_preimages(w)) t += gw_blowup(s, c);
    return t;
}

// (v0, v') with v0 + doubled(v') = w, l(v') = 0; f(v', v0, c_real, pair_sums)
template <class F>
void for_each_complex_split(const RealBlowupClass& w, F&& f) {
    const std::size_t r = w.a.size(), sn = w.b.size();
    Tuple upper;
    for (long a : w.a) upper.push_back(a / 2);
    for (long b : w.b) {
        upper.push_back(b);
        upper.push_back(b);
    }
    for (long dp = 1; w.d - 2 * dp >= 1; ++dp) {
        for_each_box(upper, [&](const Tuple& x) {
            if (sum(x) != 3 * dp - 1) return;
            RealBlowupClass v0{w.d - 2 * dp, w.a, w.b};
            Tuple sig(sn);
            for (std::size_t i = 0; i < r; ++i) v0.a[i] -= 2 * x[i];
            for (std::size_t j = 0; j < sn; ++j) {
                sig[j] = x[r + 2 * j] + x[r + 2 * j + 1];
                if (sig[j] > w.b[j]) return;
                v0.b[j] -= sig[j];
            }
            f(BlowupClass{dp, x}, v0, sig);
        });
    }
}

// <v0, v'>
long cross_pairing(const RealBlowupClass& v0, const BlowupClass& vp, const Tuple& sig) {
    long p = v0.d * vp.d;
    for (std::size_t i = 0; i < v0.a.size(); ++i) p -= v0.a[i] * vp.c[i];
    for (std::size_t j = 0; j < v0.b.size(); ++j) p -= v0.b[j] * sig[j];
    return p;
}

long real_norm(const BlowupClass& vp, std::size_t r) {
    long n = vp.d;
    for (std::size_t i = 0; i < r; ++i) n += vp.c[i];
    return n;
}

// all (v1, v2) with v1 + v2 = w and both degrees positive
template <class F>
void for_each_real_split(const RealBlowupClass& w, F&& f) {
    Tuple upper = w.a;
    upper.insert(upper.end(), w.b.begin(), w.b.end());
    const std::size_t r = w.a.size();
    for (long d1 = 1; d1 < w.d; ++d1)
        for_each_box(upper, [&](const Tuple& x) {
            RealBlowupClass v1{d1, Tuple(x.begin(), x.begin() + r), Tuple(x.begin() + r, x.end())};
            RealBlowupClass v2{w.d - d1, w.a, w.b};
            for (std::size_t i = 0; i < r; ++i) v2.a[i] -= v1.a[i];
            for (std::size_t j = 0; j < w.b.size(); ++j) v2.b[j] -= v1.b[j];
            f(v1, v2);
        });
}

bool same(const RealBlowupClass& x, const RealBlowupClass& y) {
    return x.d == y.d && x.a == y.a && x.b == y.b;
}

Rational divisor_relation(Session& s, const RealBlowupClass& v, Field f, std::size_t i) {
    const long l = ell_real_blowup(v);
    const long pv = pairing_e(v, f, i);
    RealBlowupClass w{v.d + 1, v.a, v.b};
    Rational rhs;
    if (l == 0)
        rhs -= Rational(sign_pow(sum(v.b)) * pv * (v.d + 1), 4) * doubled_sum(s, w);

    for_each_complex_split(w, [&](const BlowupClass& vp, const RealBlowupClass& v0, const Tuple& sig) {
        long pe = f == Field::R ? vp.c[i] : sig[i];
        long c = cross_pairing(v0, vp, sig) * vp.d * pe;
        if (c == 0) return;
        Rational n = gw_blowup(s, vp);
        if (n.is_zero()) return;
        rhs -= Rational(sign_pow(real_norm(vp, v.a.size())) * c) * n * eval(s, v0);
    });

    for_each_real_split(w, [&](const RealBlowupClass& v1, const RealBlowupClass& v2) {
        if (same(v1, v) || same(v2, v)) return;
        long l1 = ell_real_blowup(v1), l2 = ell_real_blowup(v2);
        if (l1 < 0 || l2 < 0) return;
        Rational c = Rational(pairing_e(v2, f, i)) * binom(l, l1 - 1) -
                     Rational(pairing_e(v1, f, i)) * binom(l, l1);
        if (c.is_zero()) return;
        rhs += Rational(v1.d) * c * eval(s, v1) * eval(s, v2);
    });
    return exact_div(rhs, Rational((v.d - l) * pv), key_of(v));
}

Rational point_relation(Session& s, const RealBlowupClass& v, std::size_t i) {
    const long l = ell_real_blowup(v);
    const long ai = v.a[i];
    RealBlowupClass down = v;
    down.a[i] -= 1;
    RealBlowupClass w = v;
    w.a[i] -= 2;

    Rational rhs = eval(s, down);
    if (l == 1 && w.a[i] >= 0) {
        long q = v.d - ai + 2;
        rhs += Rational(sign_pow(sum(v.b)) * q * q, 4) * doubled_sum(s, w);
    }
    for_each_complex_split(w, [&](const BlowupClass& vp, const RealBlowupClass& v0, const Tuple& sig) {
        long q = vp.d - vp.c[i];
        long c = cross_pairing(v0, vp, sig) * q * q;
        if (c == 0) return;
        Rational n = gw_blowup(s, vp);
        if (n.is_zero()) return;
        rhs += Rational(sign_pow(real_norm(vp, v.a.size())) * c) * n * eval(s, v0);
    });
    for_each_real_split(w, [&](const RealBlowupClass& v1, const RealBlowupClass& v2) {
        long l1 = ell_real_blowup(v1), l2 = ell_real_blowup(v2);
        if (l1 < 0 || l2 < 0) return;
        long p1 = v1.d - v1.a[i], p2 = v2.d - v2.a[i];
        if (p1 == 0) return;
        Rational c = Rational(p2) * binom(l - 1, l1 - 1) - Rational(p1) * binom(l - 1, l1);
        if (c.is_zero()) return;
        rhs -= Rational(p1) * c * eval(s, v1) * eval(s, v2);
    });
    return exact_div(rhs, Rational(ai), key_of(v));
}

std::size_t pick(const Tuple& t, long min, Pivot p) {
    std::size_t best = t.size();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] >= min && (best == t.size() || p == Pivot::Smallest)) best = i;
    return best;
}

Rational core(Session& s, const RealBlowupClass& v) {
    const long l = ell_real_blowup(v);
    const Pivot p = s.options().blowup_pivot;
    if (std::size_t i = pick(v.a, 2, p); i < v.a.size())
        return l > 0 ? point_relation(s, v, i) : divisor_relation(s, v, Field::R, i);
    if (std::size_t j = pick(v.b, 2, p); j < v.b.size() && v.d != l) return divisor_relation(s, v, Field::C, j);
    // Reached only with blowup_keep_units.  d = l forces sum(a) odd, so a
    // real unit is there and its point relation has divisor 1.
    if (v.d == l) return point_relation(s, v, 0);
    return divisor_relation(s, v, v.b.empty() ? Field::R : Field::C, 0);
}

Rational eval(Session& s, RealBlowupClass v) {
    if (v.d < 1) throw SchedulingError("real blowup class of degree " + std::to_string(v.d));
    for (long x : v.a)
        if (x < 0) return 0;
    for (long x : v.b)
        if (x < 0) return 0;
    if (ell_real_blowup(v) < 0) return 0;
    if (s.options().effectiveness_filter && !is_effective_blowup(v.d, complex_tuple(v))) return 0;

    const bool keep = s.options().blowup_keep_units;
    long pairs = 0;
    std::erase_if(v.a, [&](long x) { return x == 0 || (!keep && x == 1); });
    std::erase_if(v.b, [&](long x) {
        if (x == 1 && !keep) ++pairs;
        return x == 0 || (x == 1 && !keep);
    });
    if (v.a.empty() && v.b.empty()) return wel_p2(s, v.d, pairs);
    v.b.insert(v.b.end(), pairs, 1);
    std::sort(v.a.begin(), v.a.end(), std::greater<>());
    std::sort(v.b.begin(), v.b.end(), std::greater<>());
    return s.memo_integral(key_of(v), [&] { return core(s, v); });
}

}  // namespace

Rational wel_blowup(Session& s, RealBlowupClass v, long l) {
    if (l < 0) return 0;
    if (v.d < 1) throw UsageError("degree must be positive");
    v.b.insert(v.b.end(), l, 1);
    return eval(s, std::move(v));
}

}  // namespace winv
