#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace winv {

using Tuple = std::vector<long>;
using Vec3 = std::array<long, 3>;
using Pair2 = std::array<long, 2>;

// dL - sum c_i E_i on the blowup of P2 at c.size() points
struct BlowupClass {
    long d = 0;
    Tuple c;
};

// dL - sum a_i E_i^R - sum b_j E_j^C on P2_{r,s}
struct RealBlowupClass {
    long d = 0;
    Tuple a;
    Tuple b;
};

long ell_p2(long d);
long ell_p1p1(long a, long b);
long ell_blowup(const BlowupClass& v);
long ell_real_blowup(const RealBlowupClass& v);

// counts of real point constraints for the sixfolds
long k_p3(long d, const Tuple& m);
long k_p1cubed(const Vec3& d, const std::vector<Vec3>& m);
long k_twisted(const Pair2& d, const std::vector<Pair2>& m);

inline long norm(const Vec3& v) { return v[0] + v[1] + v[2]; }
inline long norm(const Pair2& v) { return v[0] + v[1]; }

bool is_effective_blowup(long d, Tuple c);

// (a_1..a_r, b_1, b_1, .., b_s, b_s)
Tuple complex_tuple(const RealBlowupClass& v);

// all complex v' with 2d' = v.d, 2c'_i = a_i, c'_{2j-1} + c'_{2j} = b_j
std::vector<BlowupClass> doubling_preimages(const RealBlowupClass& v);
// P2, P3, product involutions: the half class when everything is even
bool halvable(long d);
// twisted P1xP1: all (a', b') with a' + b' = d
std::vector<std::pair<long, long>> twisted_preimages(long d);

// ordered (d1, d2) with d1 + d2 = d, both >= 1
std::vector<std::pair<long, long>> degree_splits(long d);

// n choose k for small arguments, plain integers
long small_binom(long n, long k);

// calls f(x) for every x with 0 <= x_i <= upper_i, odometer order
template <class F>
void for_each_box(const Tuple& upper, F&& f) {
    Tuple x(upper.size(), 0);
    for (long u : upper)
        if (u < 0) return;
    for (;;) {
        f(static_cast<const Tuple&>(x));
        std::size_t i = 0;
        for (; i < x.size(); ++i) {
            if (x[i] < upper[i]) {
                ++x[i];
                break;
            }
            x[i] = 0;
        }
        if (i == x.size()) return;
    }
}

// Splits a multiset (equal items adjacent) into two sub-multisets, calling
// f(in, out, multiplicity) once per distinct split; multiplicity counts the
// labelled splits it stands for.
template <class T, class F>
void for_each_multiset_split(const std::vector<T>& items, F&& f) {
    std::vector<std::pair<T, long>> groups;
    for (const auto& x : items) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.emplace_back(x, 1);
    }
    Tuple upper;
    for (const auto& g : groups) upper.push_back(g.second);
    for_each_box(upper, [&](const Tuple& take) {
        std::vector<T> in, out;
        long mult = 1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            for (long j = 0; j < take[g]; ++j) in.push_back(groups[g].first);
            for (long j = take[g]; j < groups[g].second; ++j) out.push_back(groups[g].first);
            mult *= small_binom(groups[g].second, take[g]);
        }
        f(static_cast<const std::vector<T>&>(in), static_cast<const std::vector<T>&>(out), mult);
    });
}

Tuple sorted_desc(Tuple t);
std::string join(const Tuple& t, char sep = ',');
std::string vec_str(const Vec3& v);
std::string pair_str(const Pair2& v);

// lexicographic maximum over simultaneous coordinate permutations; m sorted
std::pair<Vec3, std::vector<Vec3>> canonical_p1cubed(const Vec3& d, std::vector<Vec3> m);

}  // namespace winv
