#include "winv/real_fourfold.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"

#include <utility>

namespace winv {

namespace {

long ktw(long d, long l) { return 4 * d - 1 - 2 * l; }
long kpr(long a, long b, long l) { return 2 * (a + b) - 1 - 2 * l; }

Rational twisted_by_point(Session& s, long d, long l) {
    const long k = ktw(d, l);
    Rational v;
    if (l == 2 * d - 1)
        v -= Rational(sign_pow(d)) * pow2(l - 2) * Rational(d * d) * gw_p1p1_total(s, d);
    for (long dp = 1; dp < d; ++dp) {
        long d0 = d - dp;
        Rational c = binom(l - 1, 2 * dp - 1);
        if (c.is_zero()) continue;
        v -= Rational(sign_pow(dp)) * pow2(2 * dp - 2) * Rational(d0 * dp * dp * dp) * c *
             gw_p1p1_total(s, dp) * wel_twisted(s, d0, l - 2 * dp);
    }
    for (auto [d1, d2] : degree_splits(d))
        for (long l1 = 0; l1 <= l - 1; ++l1) {
            long l2 = l - 1 - l1;
            if (ktw(d1, l1) < 0 || ktw(d2, l2) < 0) continue;
            Rational c = Rational(d1 * d2) * binom(k - 1, 4 * d1 - 2 * l1 - 2) -
                         Rational(d1 * d1) * binom(k - 1, 4 * d1 - 2 * l1 - 1);
            if (c.is_zero()) continue;
            v += Rational(2) * binom(l - 1, l1) * c * wel_twisted(s, d1, l1) * wel_twisted(s, d2, l2);
        }
    return v;
}

Rational twisted_by_pairs(Session& s, long d, long l) {
    const long k = ktw(d, l);
    Rational v;
    for (long dp = 1; dp < d; ++dp) {
        long d0 = d - dp;
        Rational c = Rational(d0) * binom(l - 2, 2 * dp - 2) - Rational(dp) * binom(l - 2, 2 * dp - 1);
        if (c.is_zero()) continue;
        v += Rational(sign_pow(dp)) * pow2(2 * dp - 2) * Rational(d0 * dp * dp) * c *
             gw_p1p1_total(s, dp) * wel_twisted(s, d0, l - 2 * dp);
    }
    for (auto [d1, d2] : degree_splits(d))
        for (long l1 = 0; l1 <= l - 2; ++l1) {
            long l2 = l - 2 - l1;
            if (ktw(d1, l1) < 0 || ktw(d2, l2 + 1) < 0) continue;
            Rational c = Rational(d1 * d2) * binom(k, 4 * d1 - 2 * l1 - 2) -
                         Rational(d1 * d1) * binom(k, 4 * d1 - 2 * l1 - 1);
            if (c.is_zero()) continue;
            v += Rational(2) * binom(l - 2, l1) * c * wel_twisted(s, d1, l1) * wel_twisted(s, d2, l2 + 1);
        }
    return v;
}

Rational twisted_real_points(Session& s, long d) {
    Rational v;
    for (auto [d1, d2] : degree_splits(d)) {
        Rational c = Rational(d1) * binom(4 * d - 2, 4 * d1 - 2) -
                     Rational(d2 + 1) * binom(4 * d - 2, 4 * d1 - 3);
        if (c.is_zero()) continue;
        v += c * wel_twisted(s, d1, 0) * wel_twisted(s, d2 + 1, 1);
    }
    return exact_div(v, Rational(2 * (d - 1)), "twisted quadric, real points");
}

Rational product_with_pairs(Session& s, long a, long b, long l) {
    const long k = kpr(a, b, l);
    Rational v;
    if (a % 2 == 0 && b % 2 == 0 && l == a + b - 1)
        v -= pow2(l - 3) * Rational(a * b) * gw_p1p1(s, a / 2, b / 2);
    for (long ap = 0; 2 * ap <= a; ++ap)
        for (long bp = 0; 2 * bp <= b; ++bp) {
            long a0 = a - 2 * ap, b0 = b - 2 * bp;
            if (ap + bp == 0 || a0 + b0 == 0) continue;
            Rational c = Rational(ap * bp * (a0 * bp + b0 * ap)) * binom(l - 1, 2 * (ap + bp) - 1);
            if (c.is_zero()) continue;
            v -= pow2(2 * (ap + bp) - 1) * c * gw_p1p1(s, ap, bp) *
                 wel_product(s, a0, b0, l - 2 * (ap + bp));
        }
    for (long a1 = 0; a1 <= a; ++a1)
        for (long b1 = 0; b1 <= b; ++b1) {
            long a2 = a - a1, b2 = b - b1;
            if (a1 + b1 == 0 || a2 + b2 == 0 || b1 == 0) continue;
            for (long l1 = 0; l1 <= l - 1; ++l1) {
                long l2 = l - 1 - l1;
                if (kpr(a1, b1, l1) < 0 || kpr(a2, b2, l2) < 0) continue;
                Rational c = Rational(a2) * binom(k - 1, 2 * (a1 + b1) - 2 * l1 - 2) -
                             Rational(a1) * binom(k - 1, 2 * (a1 + b1) - 2 * l1 - 1);
                if (c.is_zero()) continue;
                v += Rational(b1) * binom(l - 1, l1) * c * wel_product(s, a1, b1, l1) *
                     wel_product(s, a2, b2, l2);
            }
        }
    return v;
}

Rational product_no_pairs(Session& s, long a, long b) {
    Rational v;
    const long n = 2 * (a + b) - 2;
    for (long a1 = 1; a1 < a; ++a1)
        for (long b1 = 1; b1 <= b; ++b1) {
            long a2 = a - a1, b2 = b + 1 - b1;
            Rational c = Rational(b1 * b2) * binom(n, 2 * (a1 + b1) - 2) -
                         Rational(b1 * b1) * binom(n, 2 * (a1 + b1) - 1);
            if (c.is_zero()) continue;
            v += c * wel_product(s, a1, b1, 0) * wel_product(s, a2, b2, 0);
        }
    return exact_div(v, Rational(2 * (a - 1)), "product quadric, real points");
}

}  // namespace

Rational wel_twisted(Session& s, long d, long l) {
    if (d < 1) throw SchedulingError("wel_twisted at degree " + std::to_string(d));
    if (l < 0 || ktw(d, l) < 0) return 0;
    if (d == 1) return 1;
    std::string key = "P1xP1|tau'|d=" + std::to_string(d) + "|l=" + std::to_string(l);
    return s.memo_integral(key, [&] {
        if (l == 0) return twisted_real_points(s, d);
        bool alt = s.options().twisted_prefer_alt && l >= 2;
        if (ktw(d, l) >= 1 && !alt) return twisted_by_point(s, d, l);
        return twisted_by_pairs(s, d, l);
    });
}

Rational wel_product(Session& s, long a, long b, long l) {
    if (a < 0 || b < 0 || a + b == 0) throw SchedulingError("wel_product at a zero class");
    if (a > b) std::swap(a, b);
    if (l < 0 || kpr(a, b, l) < 0) return 0;
    if (a == 0) return (b == 1 && l == 0) ? 1 : 0;
    if (a == 1) return 1;
    std::string key = "P1xP1|tau11|a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                      "|l=" + std::to_string(l);
    return s.memo_integral(key, [&] { return l == 0 ? product_no_pairs(s, a, b) : product_with_pairs(s, a, b, l); });
}

}  // namespace winv
