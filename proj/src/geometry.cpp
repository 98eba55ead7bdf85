#include "winv/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace winv {

long ell_p2(long d) { return 3 * d - 1; }
long ell_p1p1(long a, long b) { return 2 * (a + b) - 1; }

long ell_blowup(const BlowupClass& v) {
    return 3 * v.d - 1 - std::accumulate(v.c.begin(), v.c.end(), 0L);
}

long ell_real_blowup(const RealBlowupClass& v) {
    return 3 * v.d - 1 - std::accumulate(v.a.begin(), v.a.end(), 0L) -
           2 * std::accumulate(v.b.begin(), v.b.end(), 0L);
}

long k_p3(long d, const Tuple& m) {
    return 2 * d + static_cast<long>(m.size()) - std::accumulate(m.begin(), m.end(), 0L);
}

long k_p1cubed(const Vec3& d, const std::vector<Vec3>& m) {
    long k = norm(d) + static_cast<long>(m.size());
    for (const auto& x : m) k -= norm(x);
    return k;
}

long k_twisted(const Pair2& d, const std::vector<Pair2>& m) {
    long k = 2 * d[0] + d[1] + static_cast<long>(m.size());
    for (const auto& x : m) k -= norm(x);
    return k;
}

bool is_effective_blowup(long d, Tuple c) {
    if (d < 1) return false;
    for (long x : c)
        if (x < 0) return false;
    std::sort(c.begin(), c.end(), std::greater<>());
    long total = 0, pairs = 0;
    bool units = true;
    for (long x : c) {
        total += x;
        pairs += x * (x - 1) / 2;
        if (x > 1) units = false;
    }
    if (total > 3 * d - 1) return false;
    if (pairs > (d - 1) * (d - 2) / 2) return false;
    for (long dp = 1; dp <= d; ++dp) {
        // a class with all c_i <= 1 may meet the curve dL - sum E_i, which is itself
        if (dp == d && units) continue;
        std::size_t n = static_cast<std::size_t>(dp * (dp + 3) / 2);
        long prefix = 0;
        for (std::size_t i = 0; i < std::min(n, c.size()); ++i) prefix += c[i];
        if (prefix > dp * d) return false;
    }
    return true;
}

Tuple complex_tuple(const RealBlowupClass& v) {
    Tuple c = v.a;
    for (long b : v.b) {
        c.push_back(b);
        c.push_back(b);
    }
    return c;
}

std::vector<BlowupClass> doubling_preimages(const RealBlowupClass& v) {
    std::vector<BlowupClass> out;
    if (v.d % 2 != 0) return out;
    Tuple head;
    for (long a : v.a) {
        if (a % 2 != 0) return out;
        head.push_back(a / 2);
    }
    for_each_box(v.b, [&](const Tuple& x) {
        BlowupClass w{v.d / 2, head};
        for (std::size_t j = 0; j < x.size(); ++j) {
            w.c.push_back(x[j]);
            w.c.push_back(v.b[j] - x[j]);
        }
        out.push_back(std::move(w));
    });
    return out;
}

bool halvable(long d) { return d % 2 == 0; }

std::vector<std::pair<long, long>> twisted_preimages(long d) {
    std::vector<std::pair<long, long>> out;
    for (long a = 0; a <= d; ++a) out.emplace_back(a, d - a);
    return out;
}

std::vector<std::pair<long, long>> degree_splits(long d) {
    std::vector<std::pair<long, long>> out;
    for (long d1 = 1; d1 < d; ++d1) out.emplace_back(d1, d - d1);
    return out;
}

long small_binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Tuple sorted_desc(Tuple t) {
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

std::string join(const Tuple& t, char sep) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(t[i]);
    }
    return s;
}

std::string vec_str(const Vec3& v) {
    return std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]);
}

std::string pair_str(const Pair2& v) { return std::to_string(v[0]) + std::to_string(v[1]); }

std::pair<Vec3, std::vector<Vec3>> canonical_p1cubed(const Vec3& d, std::vector<Vec3> m) {
    std::array<int, 3> p{0, 1, 2};
    Vec3 best_d{};
    std::vector<Vec3> best_m;
    bool first = true;
    do {
        Vec3 pd{d[p[0]], d[p[1]], d[p[2]]};
        std::vector<Vec3> pm;
        pm.reserve(m.size());
        for (const auto& x : m) pm.push_back({x[p[0]], x[p[1]], x[p[2]]});
        std::sort(pm.begin(), pm.end(), std::greater<>());
        if (first || std::tie(pd, pm) > std::tie(best_d, best_m)) {
            best_d = pd;
            best_m = std::move(pm);
            first = false;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return {best_d, best_m};
}

}  // namespace winv
