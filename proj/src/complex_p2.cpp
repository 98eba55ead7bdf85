#include "winv/complex_gw.hpp"

#include "winv/error.hpp"

#include <algorithm>

namespace winv {

Rational gw_p2(Session& s, long d) {
    if (d < 1) throw SchedulingError("gw_p2 at d=" + std::to_string(d));
    if (d == 1) return 1;
    return s.memo_integral("P2||d=" + std::to_string(d), [&] {
        Rational sum;
        for (auto [d1, d2] : degree_splits(d)) {
            Rational w = exact_div(Rational(2 * (d1 - d2) * (d1 - d2)), Rational(3 * d - 2));
            Rational coef = Rational(d1 * d2) - w;
            sum += coef * binom(3 * d - 2, 3 * d1 - 1) * Rational(d1 * d2) * gw_p2(s, d1) *
                   gw_p2(s, d2);
        }
        return exact_div(sum, Rational(6 * (d - 1)), "P2 recursion");
    });
}

Rational gw_p1p1(Session& s, long a, long b) {
    if (a < 0 || b < 0) return 0;
    if (a > b) std::swap(a, b);
    if (a == 0) return b == 1 ? 1 : 0;
    if (a == 1) return 1;
    return s.memo_integral("P1xP1||a=" + std::to_string(a) + ",b=" + std::to_string(b), [&] {
        Rational sum;
        long top = 2 * a + 2 * b - 4;
        for (long a1 = 0; a1 <= a; ++a1)
            for (long b1 = 0; b1 <= b; ++b1) {
                long a2 = a - a1, b2 = b - b1;
                if ((a1 == 0 && b1 == 0) || (a2 == 0 && b2 == 0)) continue;
                long w = a1 * b2 + a2 * b1;
                if (w == 0) continue;
                Rational n1 = gw_p1p1(s, a1, b1);
                if (n1.is_zero()) continue;
                Rational n2 = gw_p1p1(s, a2, b2);
                if (n2.is_zero()) continue;
                Rational inner = Rational(a2 + b2) * binom(top, 2 * a1 + 2 * b1 - 2) -
                                 Rational(a1 + b1) * binom(top, 2 * a1 + 2 * b1 - 1);
                sum += Rational(w * (a1 + b1)) * inner * n1 * n2;
            }
        return exact_div(sum, Rational(2), "P1xP1 WDVV");
    });
}

Rational gw_p1p1_total(Session& s, long d) {
    Rational sum;
    for (long a = 0; a <= d; ++a) sum += gw_p1p1(s, a, d - a);
    return sum;
}

}  // namespace winv
