#include "winv/real_fourfold.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"

namespace winv {

namespace {

long kpts(long d, long l) { return 3 * d - 1 - 2 * l; }

Rational by_real_point(Session& s, long d, long l) {
    const long k = kpts(d, l);
    Rational v;
    if (d % 2 == 0 && 2 * l == 3 * d - 2)
        v -= pow_neg2(3 * d / 2 - 4) * Rational(d * d) * gw_p2(s, d / 2);
    for (long dp = 1; 2 * dp < d; ++dp) {
        long d0 = d - 2 * dp;
        Rational c = binom(l - 1, 3 * dp - 1);
        if (c.is_zero()) continue;
        v += pow_neg2(3 * dp - 1) * Rational(d0 * dp * dp * dp) * c * gw_p2(s, dp) *
             wel_p2(s, d0, l - 3 * dp);
    }
    for (auto [d1, d2] : degree_splits(d))
        for (long l1 = 0; l1 <= l - 1; ++l1) {
            long l2 = l - 1 - l1;
            if (kpts(d1, l1) < 0 || kpts(d2, l2) < 0) continue;
            Rational c = Rational(d1 * d2) * binom(k - 1, 3 * d1 - 2 * l1 - 2) -
                         Rational(d1 * d1) * binom(k - 1, 3 * d1 - 2 * l1 - 1);
            if (c.is_zero()) continue;
            v += binom(l - 1, l1) * c * wel_p2(s, d1, l1) * wel_p2(s, d2, l2);
        }
    return v;
}

Rational by_pairs(Session& s, long d, long l) {
    const long k = kpts(d, l);
    Rational v;
    for (long dp = 1; 2 * dp < d; ++dp) {
        long d0 = d - 2 * dp;
        Rational c = Rational(d0) * binom(l - 2, 3 * dp - 2) - Rational(2 * dp) * binom(l - 2, 3 * dp - 1);
        if (c.is_zero()) continue;
        v += pow_neg2(3 * dp - 2) * Rational(d0 * dp * dp) * c * gw_p2(s, dp) *
             wel_p2(s, d0, l - 3 * dp);
    }
    for (auto [d1, d2] : degree_splits(d))
        for (long l1 = 0; l1 <= l - 2; ++l1) {
            long l2 = l - 2 - l1;
            if (kpts(d1, l1) < 0 || kpts(d2, l2 + 1) < 0) continue;
            Rational c = Rational(d1 * d2) * binom(k, 3 * d1 - 2 * l1 - 2) -
                         Rational(d1 * d1) * binom(k, 3 * d1 - 2 * l1 - 1);
            if (c.is_zero()) continue;
            v += binom(l - 2, l1) * c * wel_p2(s, d1, l1) * wel_p2(s, d2, l2 + 1);
        }
    return v;
}

Rational real_points_only(Session& s, long d) {
    Rational v;
    for (auto [d1, d2] : degree_splits(d)) {
        Rational c = Rational(d1) * binom(3 * d - 3, 3 * d1 - 2) -
                     Rational(d2 + 1) * binom(3 * d - 3, 3 * d1 - 3);
        if (c.is_zero()) continue;
        v += c * wel_p2(s, d1, 0) * wel_p2(s, d2 + 1, 1);
    }
    return v;
}

}  // namespace

Rational wel_p2(Session& s, long d, long l) {
    if (d < 1) throw SchedulingError("wel_p2 at degree " + std::to_string(d));
    if (l < 0 || kpts(d, l) < 0) return 0;
    if (d == 1 && l <= 1) return 1;
    if (d == 2 && l <= 2) return 1;
    std::string key = "P2|tau2|d=" + std::to_string(d) + "|l=" + std::to_string(l);
    return s.memo_integral(key, [&] {
        if (l == 0) return real_points_only(s, d);
        bool alt = s.options().p2_prefer_alt && l >= 2;
        if (kpts(d, l) >= 1 && !alt) return by_real_point(s, d, l);
        return by_pairs(s, d, l);
    });
}

}  // namespace winv
