#include "winv/verify.hpp"

#include "winv/complex_gw.hpp"
#include "winv/error.hpp"
#include "winv/real_fourfold.hpp"
#include "winv/real_sixfold.hpp"
#include "winv/session.hpp"
#include "winv/tables.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace winv {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

Check run_check(std::string name, const std::function<void(Check&)>& body) {
    Check c;
    c.name = std::move(name);
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return c;
}

// counts comparisons and remembers the first failure
struct Tally {
    long seen = 0, bad = 0;
    std::string first;

    void see(bool ok, const std::function<std::string()>& what) {
        ++seen;
        if (ok) return;
        if (bad++ == 0) first = what();
    }
    void finish(Check& c, const std::string& what = "keys agree") const {
        c.pass = bad == 0 && seen > 0;
        if (seen == 0)
            c.detail = "nothing compared";
        else if (bad == 0)
            c.detail = std::to_string(seen) + " " + what;
        else
            c.detail = std::to_string(bad) + "/" + std::to_string(seen) + " differ, first " + first;
    }
};

std::string show(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}
std::string show(const Pair2& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}
template <class T>
std::string show(const T& d, const std::vector<T>& m) {
    std::string s = show(d) + " m=";
    for (const auto& x : m) s += show(x);
    return s;
}
std::string show_p3(long d, const Tuple& m) { return "d=" + std::to_string(d) + " m=" + join(m); }

std::string mismatch_text(const Rational& a, const Rational& b) {
    return a.str() + " vs " + b.str();
}

// ---- key enumerations -------------------------------------------------

struct P3Key {
    long d;
    Tuple m;
};

std::vector<P3Key> p3_keys(long max_d) {
    std::vector<P3Key> out;
    for (long d = 1; d <= max_d; ++d)
        for (long n3 = 0; 2 * n3 <= 2 * d; ++n3)
            for (long n2 = 0; n2 + 2 * n3 <= 2 * d; ++n2) {
                Tuple m(n3, 3);
                m.insert(m.end(), n2, 2);
                out.push_back({d, m});
            }
    return out;
}

struct ProductKey {
    Vec3 d;
    std::vector<Vec3> m;
};

constexpr std::array<Vec3, 4> kCubeTypes{Vec3{0, 1, 1}, Vec3{1, 0, 1}, Vec3{1, 1, 0}, Vec3{1, 1, 1}};

// insertion lists over the codimension >= 2 classes; weight of a list is
// (#codim 2) + 2 (#points), and `accept` decides which weights to keep
void for_each_cube_list(long max_weight, const std::function<bool(long)>& accept,
                        const std::function<void(std::vector<Vec3>)>& f) {
    for (long n3 = 0; 2 * n3 <= max_weight; ++n3)
        for (long n0 = 0; n0 + 2 * n3 <= max_weight; ++n0)
            for (long n1 = 0; n0 + n1 + 2 * n3 <= max_weight; ++n1)
                for (long n2 = 0; n0 + n1 + n2 + 2 * n3 <= max_weight; ++n2) {
                    if (!accept(n0 + n1 + n2 + 2 * n3)) continue;
                    std::vector<Vec3> m;
                    const long n[4] = {n0, n1, n2, n3};
                    for (int t = 3; t >= 0; --t) m.insert(m.end(), n[t], kCubeTypes[t]);
                    f(std::move(m));
                }
}

std::vector<Vec3> classes_up_to(long max_norm) {
    std::vector<Vec3> out;
    for (long a = 0; a <= max_norm; ++a)
        for (long b = 0; a + b <= max_norm; ++b)
            for (long c = 0; a + b + c <= max_norm; ++c)
                if (a + b + c > 0) out.push_back({a, b, c});
    return out;
}

// fiber classes: third entry 0 or 1, d1 + d2 <= n, all three orders
std::vector<Vec3> fiber_classes(long n) {
    std::vector<Vec3> out;
    for (long a = 0; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b)
            for (long c = 0; c <= 1; ++c)
                if (a + b + c > 0) out.push_back({a, b, c});
    return out;
}

std::vector<ProductKey> real_product_keys(const std::vector<Vec3>& classes) {
    std::vector<ProductKey> out;
    for (const auto& d : classes)
        for_each_cube_list(norm(d), [](long) { return true; },
                           [&](std::vector<Vec3> m) { out.push_back({d, std::move(m)}); });
    return out;
}

std::vector<ProductKey> complex_product_keys(const std::vector<Vec3>& classes) {
    std::vector<ProductKey> out;
    for (const auto& d : classes) {
        const long want = 2 * norm(d);
        for_each_cube_list(want, [want](long w) { return w == want; },
                           [&](std::vector<Vec3> m) { out.push_back({d, std::move(m)}); });
    }
    return out;
}

struct TwistedKey {
    Pair2 d;
    std::vector<Pair2> m;
};

std::vector<TwistedKey> twisted_keys(long max_a, long min_b, long max_b) {
    std::vector<TwistedKey> out;
    for (long a = 0; a <= max_a; ++a)
        for (long b = min_b; b <= max_b; ++b) {
            if (a + b == 0) continue;
            const long cap = 2 * a + b;
            for (long n21 = 0; 2 * n21 <= cap; ++n21)
                for (long n20 = 0; n20 + 2 * n21 <= cap; ++n20)
                    for (long n11 = 0; n11 + n20 + 2 * n21 <= cap; ++n11) {
                        std::vector<Pair2> m;
                        m.insert(m.end(), n21, Pair2{2, 1});
                        m.insert(m.end(), n20, Pair2{2, 0});
                        m.insert(m.end(), n11, Pair2{1, 1});
                        out.push_back({{a, b}, std::move(m)});
                    }
        }
    return out;
}

bool p3_forbidden(long d, const Tuple& m) { return (d - k_p3(d, m)) % 2 == 0; }

// ---- tables -------------------------------------------------------------

std::string golden_path(const std::string& dir, int n) {
    return (fs::path(dir) / table_file_name(n)).string();
}

long count_mismatches(const Table& a, const Table& b) {
    return static_cast<long>(compare_tables(a, b).size());
}

std::vector<Check> suite_tables(const VerifyConfig& cfg) {
    std::vector<Check> out;
    for (int n = 1; n <= kTableCount; ++n) out.push_back(check_table(n, cfg.golden_dir));
    return out;
}

// ---- cross --------------------------------------------------------------

Check cross_tables(const std::string& name, Options alt) {
    return run_check(name, [&](Check& c) {
        Session a, b(alt);
        Tally t;
        for (int n = 4; n <= 18; ++n) {
            long bad = count_mismatches(build_table(a, n), build_table(b, n));
            t.see(bad == 0, [&] { return table_file_name(n) + " (" + std::to_string(bad) + " cells)"; });
        }
        t.finish(c, "tables agree");
    });
}

std::vector<Check> suite_cross(const VerifyConfig& cfg) {
    std::vector<Check> out;
    out.push_back(run_check("cross.p2", [&](Check& c) {
        Session a, b(Options{.p2_prefer_alt = true});
        Tally t;
        for (long d = 1; d <= cfg.cross_p2_max_degree; ++d)
            for (long l = 0; 3 * d - 1 - 2 * l >= 0; ++l) {
                Rational x = wel_p2(a, d, l), y = wel_p2(b, d, l);
                t.see(x == y, [&] {
                    return "d=" + std::to_string(d) + " l=" + std::to_string(l) + ": " + mismatch_text(x, y);
                });
            }
        t.finish(c);
    }));
    out.push_back(run_check("cross.twisted", [&](Check& c) {
        Session a, b(Options{.twisted_prefer_alt = true});
        Tally t;
        for (long d = 1; d <= cfg.cross_twisted_max_degree; ++d)
            for (long l = 0; 4 * d - 1 - 2 * l >= 0; ++l) {
                Rational x = wel_twisted(a, d, l), y = wel_twisted(b, d, l);
                t.see(x == y, [&] {
                    return "d=" + std::to_string(d) + " l=" + std::to_string(l) + ": " + mismatch_text(x, y);
                });
            }
        t.finish(c);
    }));
    out.push_back(cross_tables("cross.pivot", Options{.blowup_pivot = Pivot::Smallest}));
    out.push_back(cross_tables("cross.units", Options{.blowup_keep_units = true}));
    out.push_back(cross_tables("cross.filter", Options{.effectiveness_filter = false}));
    out.push_back(run_check("cross.p3", [&](Check& c) {
        Session a, b(Options{.sixfold_prefer_alt = true});
        Tally t;
        for (const auto& [d, m] : p3_keys(cfg.p3_max_degree)) {
            Rational x = rgw_p3(a, d, m), y = rgw_p3(b, d, m);
            t.see(x == y, [&] { return show_p3(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    return out;
}

// ---- P3 -----------------------------------------------------------------

std::vector<Check> suite_p3(const VerifyConfig& cfg) {
    std::vector<Check> out;
    out.push_back(run_check("p3.values", [](Check& c) {
        Session s;
        struct Want {
            const char* what;
            Rational got, want;
        };
        std::vector<Want> w = {
            {"<3,3>_1", gw_p3(s, 1, {3, 3}), 1},
            {"<3>_1 real", rgw_p3(s, 1, {3}), -1},
            {"<2,2>_1 real", rgw_p3(s, 1, {2, 2}), -1},
            {"<>_1 real", rgw_p3(s, 1, {}), 1},
        };
        Tally t;
        for (const auto& x : w)
            t.see(x.got == x.want, [&] { return std::string(x.what) + " = " + x.got.str(); });
        t.finish(c, "values agree");
    }));
    out.push_back(run_check("p3.relations", [](Check& c) {
        Session s, alt(Options{.sixfold_prefer_alt = true});
        Rational first = rgw_p3(s, 2, {3, 2});
        Rational second = rgw_p3(alt, 2, {3, 2});
        // the same number written through degree-one values only, once per relation
        Rational via_pairs = Rational(-2) * gw_p3(s, 1, {3, 2, 2}) - rgw_p3(s, 1, {2, 2}) * rgw_p3(s, 1, {}) +
                             rgw_p3(s, 1, {2}) * rgw_p3(s, 1, {2});
        Rational via_point = rgw_p3(s, 1, {3}) * rgw_p3(s, 1, {1});
        c.pass = first == second && first == via_pairs && first == via_point && !first.is_zero();
        c.detail = "<3,2>_2 = " + first.str() + ", " + second.str() + ", " + via_pairs.str() + ", " +
                   via_point.str();
    }));
    out.push_back(run_check("p3.parity", [&](Check& c) {
        Session off(Options{.parity_shortcut = false});
        Tally t;
        for (const auto& [d, m] : p3_keys(cfg.p3_max_degree)) {
            if (!p3_forbidden(d, m)) continue;
            Rational v = rgw_p3(off, d, m);
            t.see(v.is_zero(), [&] { return show_p3(d, m) + " = " + v.str(); });
        }
        t.finish(c, "forbidden keys vanish");
    }));
    return out;
}

// ---- fiber --------------------------------------------------------------

std::vector<Check> suite_fiber(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const Options off{.closed_forms = false};
    out.push_back(run_check("fiber.complex", [&](Check& c) {
        Session a, b(off);
        Tally t;
        for (const auto& [d, m] : complex_product_keys(fiber_classes(cfg.fiber_max_degree))) {
            Rational x = gw_p1cubed(a, d, m), y = gw_p1cubed(b, d, m);
            t.see(x == y, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("fiber.phi3", [&](Check& c) {
        Session a, b(off);
        Tally t;
        for (const auto& [d, m] : real_product_keys(fiber_classes(cfg.fiber_max_degree))) {
            Rational x = rgw_product(a, d, m), y = rgw_product(b, d, m);
            t.see(x == y, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("fiber.phi3'", [&](Check& c) {
        Session a, b(off);
        Tally t;
        for (const auto& [d, m] : twisted_keys(cfg.fiber_max_degree - 1, 0, 1)) {
            Rational x = rgw_twisted(a, d, m), y = rgw_twisted(b, d, m);
            t.see(x == y, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("fiber.base", [&](Check& c) {
        Tally t;
        for (bool closed : {true, false}) {
            Session s(Options{.closed_forms = closed});
            Rational x = rgw_product(s, {1, 1, 1}, {}), y = rgw_twisted(s, {1, 1}, {});
            t.see(x == -1, [&] { return "phi3 (1,1,1) = " + x.str(); });
            t.see(y == 1, [&] { return "phi3' (1,1) = " + y.str(); });
        }
        t.finish(c, "values agree");
    }));
    return out;
}

// ---- flip ---------------------------------------------------------------

std::vector<Check> suite_flip(const VerifyConfig&) {
    std::vector<Check> out;
    out.push_back(run_check("flip.product", [](Check& c) {
        Session a, b(Options{.flip_k3mod4 = true});
        Tally t;
        long flipped = 0;
        for (const auto& [d, m] : real_product_keys(classes_up_to(4))) {
            const long k = k_p1cubed(d, m);
            Rational x = rgw_product(a, d, m), y = rgw_product(b, d, m);
            Rational want = k % 4 == 3 ? -x : x;
            if (k % 4 == 3 && !x.is_zero()) ++flipped;
            t.see(y == want, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
        c.pass = c.pass && flipped > 0;
        c.detail += ", " + std::to_string(flipped) + " nonzero sign changes";
    }));
    out.push_back(run_check("flip.twisted", [](Check& c) {
        Session a, b(Options{.flip_k3mod4 = true});
        Tally t;
        long flipped = 0;
        for (const auto& [d, m] : twisted_keys(3, 0, 3)) {
            const long k = k_twisted(d, m);
            Rational x = rgw_twisted(a, d, m), y = rgw_twisted(b, d, m);
            Rational want = k % 4 == 3 ? -x : x;
            if (k % 4 == 3 && !x.is_zero()) ++flipped;
            t.see(y == want, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
        c.pass = c.pass && flipped > 0;
        c.detail += ", " + std::to_string(flipped) + " nonzero sign changes";
    }));
    return out;
}

// ---- parity -------------------------------------------------------------

// whether a memo key is a real sixfold key, and whether its parity forbids a value
struct SixfoldKey {
    bool sixfold = false;
    bool forbidden = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Tuple numbers(const std::string& s) {
    Tuple t;
    for (const auto& x : split(s, ','))
        if (!x.empty()) t.push_back(std::stol(x));
    return t;
}

SixfoldKey classify(const std::string& key) {
    auto f = split(key, '|');
    if (f.size() < 4 || f[3].rfind("m=", 0) != 0) return {};
    const std::string ms = f[3].substr(2);
    if (f[0] == "P3" && f[1] == "tau3") {
        long d = std::stol(f[2].substr(2));
        return {true, p3_forbidden(d, numbers(ms))};
    }
    if (f[0] != "P1^3" || (f[1] != "phi3" && f[1] != "phi3'")) return {};
    Tuple d = numbers(f[2]);
    long k = 0;
    if (f[1] == "phi3") {
        std::vector<Vec3> m;
        for (const auto& x : split(ms, ','))
            if (!x.empty()) m.push_back({x[0] - '0', x[1] - '0', x[2] - '0'});
        k = k_p1cubed({d.at(0), d.at(1), d.at(2)}, m);
    } else {
        std::vector<Pair2> m;
        for (const auto& x : split(ms, ','))
            if (!x.empty()) m.push_back({x[0] - '0', x[1] - '0'});
        k = k_twisted({d.at(0), d.at(1)}, m);
    }
    return {true, k % 2 == 0};
}

std::vector<Check> suite_parity(const VerifyConfig& cfg) {
    std::vector<Check> out;
    Session on, off(Options{.parity_shortcut = false});
    out.push_back(run_check("parity.p3", [&](Check& c) {
        Tally t;
        for (const auto& [d, m] : p3_keys(cfg.p3_max_degree)) {
            Rational x = rgw_p3(on, d, m), y = rgw_p3(off, d, m);
            bool ok = x == y && (!p3_forbidden(d, m) || y.is_zero());
            t.see(ok, [&] { return show_p3(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("parity.product", [&](Check& c) {
        Tally t;
        for (const auto& [d, m] : real_product_keys(classes_up_to(4))) {
            Rational x = rgw_product(on, d, m), y = rgw_product(off, d, m);
            bool ok = x == y && (k_p1cubed(d, m) % 2 == 1 || y.is_zero());
            t.see(ok, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("parity.twisted", [&](Check& c) {
        Tally t;
        for (const auto& [d, m] : twisted_keys(3, 0, 3)) {
            Rational x = rgw_twisted(on, d, m), y = rgw_twisted(off, d, m);
            bool ok = x == y && (k_twisted(d, m) % 2 == 1 || y.is_zero());
            t.see(ok, [&] { return show(d, m) + ": " + mismatch_text(x, y); });
        }
        t.finish(c);
    }));
    out.push_back(run_check("parity.tables", [&](Check& c) {
        Tally t;
        for (int n : {19, 20}) {
            long bad = count_mismatches(build_table(on, n), build_table(off, n));
            t.see(bad == 0, [&] { return table_file_name(n); });
        }
        t.finish(c, "tables agree");
    }));
    // everything the unshortcut session memoized along the way
    out.push_back(run_check("parity.cache", [&](Check& c) {
        Tally t;
        for (const auto& [key, v] : off.store().records()) {
            auto cls = classify(key);
            if (!cls.sixfold || !cls.forbidden) continue;
            t.see(v.is_zero(), [&] { return key + " = " + v.str(); });
        }
        t.finish(c, "forbidden records vanish");
    }));
    return out;
}

// ---- symmetry -----------------------------------------------------------

template <class T, class F>
void for_each_permutation(std::vector<T> v, long cap, F&& f) {
    std::sort(v.begin(), v.end());
    long n = 0;
    do {
        f(v);
    } while (++n < cap && std::next_permutation(v.begin(), v.end()));
}

Vec3 permuted(const Vec3& v, const std::array<int, 3>& p) { return {v[p[0]], v[p[1]], v[p[2]]}; }

std::vector<Check> suite_symmetry(const VerifyConfig&) {
    std::vector<Check> out;
    out.push_back(run_check("symmetry.p1p1", [](Check& c) {
        Session s;
        Tally t;
        for (long a = 0; a <= 6; ++a)
            for (long b = a + 1; b <= 6; ++b) {
                Rational x = gw_p1p1(s, a, b), y = gw_p1p1(s, b, a);
                t.see(x == y, [&] { return "complex (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
                if (a == 0) continue;
                for (long l = 0; 2 * (a + b) - 1 - 2 * l >= 0; ++l) {
                    Rational u = wel_product(s, a, b, l), w = wel_product(s, b, a, l);
                    t.see(u == w, [&] {
                        return "real (" + std::to_string(a) + "," + std::to_string(b) + ") l=" + std::to_string(l);
                    });
                }
            }
        t.finish(c, "pairs agree");
    }));
    out.push_back(run_check("symmetry.blowup", [](Check& c) {
        Session s;
        Tally t;
        for (int n = 4; n <= 18; ++n)
            for (const auto& v : blowup_classes(n)) {
                const long ell = ell_real_blowup(v);
                std::vector<Rational> ref;
                for (long l = 0; 2 * l <= ell; ++l) ref.push_back(wel_blowup(s, v, l));
                const Rational cref = gw_blowup(s, {v.d, complex_tuple(v)});
                auto label = [&] { return table_file_name(n) + " d=" + std::to_string(v.d) + " a=" + join(v.a) + " b=" + join(v.b); };
                for_each_permutation(v.a, 60, [&](const Tuple& a) {
                    for_each_permutation(v.b, 60, [&](const Tuple& b) {
                        RealBlowupClass w{v.d, a, b};
                        for (long l = 0; 2 * l <= ell; ++l)
                            t.see(wel_blowup(s, w, l) == ref[l], label);
                    });
                });
                for_each_permutation(complex_tuple(v), 200, [&](const Tuple& cc) {
                    t.see(gw_blowup(s, {v.d, cc}) == cref, label);
                });
            }
        t.finish(c, "permuted classes agree");
    }));
    out.push_back(run_check("symmetry.p1cubed", [](Check& c) {
        Session s;
        Tally t;
        const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        auto permute_all = [&](const ProductKey& k, const std::array<int, 3>& p) {
            ProductKey q{permuted(k.d, p), {}};
            for (const auto& x : k.m) q.m.push_back(permuted(x, p));
            std::reverse(q.m.begin(), q.m.end());  // also off canonical order
            return q;
        };
        for (const auto& k : complex_product_keys(classes_up_to(4))) {
            Rational ref = gw_p1cubed(s, k.d, k.m);
            for (const auto& p : perms) {
                auto q = permute_all(k, p);
                t.see(gw_p1cubed(s, q.d, q.m) == ref, [&] { return "complex " + show(k.d, k.m); });
            }
        }
        for (const auto& k : real_product_keys(classes_up_to(4))) {
            Rational ref = rgw_product(s, k.d, k.m);
            for (const auto& p : perms) {
                auto q = permute_all(k, p);
                t.see(rgw_product(s, q.d, q.m) == ref, [&] { return "phi3 " + show(k.d, k.m); });
            }
        }
        t.finish(c, "permuted keys agree");
    }));
    out.push_back(run_check("symmetry.p3", [](Check& c) {
        Session s;
        Tally t;
        for (const auto& [d, m] : p3_keys(3)) {
            Rational ref = rgw_p3(s, d, m), cref = gw_p3(s, d, m);
            for_each_permutation(m, 50, [&](const Tuple& q) {
                t.see(rgw_p3(s, d, q) == ref && gw_p3(s, d, q) == cref, [&] { return show_p3(d, m); });
            });
        }
        t.finish(c, "orderings agree");
    }));
    return out;
}

// ---- integrality --------------------------------------------------------

bool rational_sixfold(const std::string& key) {
    // real (P1)^3 keys and the half basis may carry powers of 2
    return key.rfind("P1^3|", 0) == 0 && key.rfind("P1^3||", 0) != 0;
}

std::vector<Check> suite_integrality(const VerifyConfig&) {
    std::vector<Check> out;
    Session s;
    out.push_back(run_check("integrality.tables", [&](Check& c) {
        Tally t;
        for (int n = 1; n <= kTableCount; ++n) {
            Table tab = build_table(s, n);
            for (std::size_t r = 0; r < tab.rows.size(); ++r)
                for (std::size_t j = 0; j < tab.columns.size(); ++j) {
                    const auto& cell = tab.cells[r][j];
                    if (!cell) continue;
                    t.see(cell->is_integer(), [&] {
                        return table_file_name(n) + " " + tab.rows[r] + " " + tab.columns[j] + " = " + cell->str();
                    });
                }
        }
        t.finish(c, "cells integral");
    }));
    out.push_back(run_check("integrality.memo", [&](Check& c) {
        Tally t;
        for (const auto& [key, v] : s.store().records()) {
            if (rational_sixfold(key)) continue;
            t.see(v.is_integer(), [&] { return key + " = " + v.str(); });
        }
        t.finish(c, "records integral");
    }));
    return out;
}

// ---- memo ---------------------------------------------------------------

class TempFile {
public:
    TempFile() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("winv-" + std::to_string(rd()) + std::to_string(rd()) + ".cache");
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    std::string str() const { return path_.string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << text;
}

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    }
    return false;
}

const std::vector<int> kSampleTables{1, 6, 12, 19, 20};

std::vector<Check> suite_memo(const VerifyConfig&) {
    std::vector<Check> out;
    out.push_back(run_check("memo.roundtrip", [](Check& c) {
        TempFile f1, f2;
        Session a;
        std::vector<std::string> cold;
        for (int n : kSampleTables) cold.push_back(render_csv(build_table(a, n)));
        const std::size_t saved = a.store().save(f1.str());

        Session b;
        b.store().load(f1.str());
        bool same_records = b.store().records() == a.store().records();
        bool same_tables = true;
        for (std::size_t i = 0; i < kSampleTables.size(); ++i)
            same_tables = same_tables && render_csv(build_table(b, kSampleTables[i])) == cold[i];
        bool no_new = b.store().size() == saved;
        b.store().save(f2.str());
        bool same_bytes = slurp(f1.str()) == slurp(f2.str());
        c.pass = same_records && same_tables && no_new && same_bytes;
        c.detail = std::to_string(saved) + " records;";
        if (!same_records) c.detail += " records differ after load;";
        if (!same_tables) c.detail += " warm tables differ;";
        if (!no_new) c.detail += " warm build computed new keys;";
        if (!same_bytes) c.detail += " re-saved file differs;";
        if (c.pass) c.detail += " reload, warm rebuild and re-save identical";
    }));
    out.push_back(run_check("memo.errors", [](Check& c) {
        Tally t;
        MemoStore m;
        m.insert("K|1|", 1);
        m.insert("K|1|", 1);
        t.see(throws<CorruptionError>([&] { m.insert("K|1|", 2); }), [] { return "conflicting insert accepted"; });

        TempFile f;
        const std::string header = std::string("#winv-cache v1 ") + kEngineVersion + "\n";
        spit(f.str(), header + "K|2|\t3\nK|3|");
        t.see(throws<ParseError>([&] { MemoStore x; x.load(f.str()); }), [] { return "truncated record accepted"; });
        spit(f.str(), header + "K|2|\t3/\n");
        t.see(throws<ParseError>([&] { MemoStore x; x.load(f.str()); }), [] { return "bad value accepted"; });
        spit(f.str(), "K|2|\t3\n");
        t.see(throws<ParseError>([&] { MemoStore x; x.load(f.str()); }), [] { return "missing header accepted"; });
        spit(f.str(), "#winv-cache v1 0-other\nK|2|\t3\n");
        t.see(throws<ParseError>([&] { MemoStore x; x.load(f.str()); }), [] { return "version mismatch accepted"; });
        MemoStore forced;
        forced.load(f.str(), true);
        t.see(forced.size() == 1, [] { return "forced load dropped records"; });
        spit(f.str(), header + "K|1|\t2\n");
        t.see(throws<CorruptionError>([&] { m.load(f.str()); }), [] { return "conflicting file accepted"; });
        t.finish(c, "cases behave");
    }));
    return out;
}

// ---- determinism --------------------------------------------------------

std::vector<Check> suite_determinism(const VerifyConfig&) {
    std::vector<Check> out;
    out.push_back(run_check("determinism.tables", [](Check& c) {
        Session a, b;
        TempFile fa, fb;
        Tally t;
        for (int n = 1; n <= kTableCount; ++n) {
            Table x = build_table(a, n), y = build_table(b, n);
            bool same = render_csv(x) == render_csv(y) && render_json(x).dump() == render_json(y).dump();
            t.see(same, [&] { return table_file_name(n); });
        }
        a.store().save(fa.str());
        b.store().save(fb.str());
        t.see(slurp(fa.str()) == slurp(fb.str()), [] { return "cache files differ"; });
        t.finish(c, "renders identical");
    }));
    return out;
}

using SuiteFn = std::vector<Check> (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"tables", suite_tables},       {"cross", suite_cross},
        {"p3", suite_p3},               {"fiber", suite_fiber},
        {"flip", suite_flip},           {"parity", suite_parity},
        {"symmetry", suite_symmetry},   {"integrality", suite_integrality},
        {"memo", suite_memo},           {"determinism", suite_determinism},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

std::vector<Check> run_suite(const std::string& name, const VerifyConfig& cfg) {
    std::vector<Check> out;
    for (const auto& [n, f] : registry()) {
        if (name != "all" && name != n) continue;
        auto part = f(cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    if (out.empty() && name != "all") throw UsageError("unknown suite '" + name + "'");
    return out;
}

Check check_table(int number, const std::string& golden_dir) {
    return run_check("tables." + table_file_name(number).substr(0, 3), [&](Check& c) {
        Table want = read_csv_file(golden_path(golden_dir, number));
        Session s;
        Table got = build_table(s, number);
        auto diff = compare_tables(want, got);
        c.pass = diff.empty();
        if (c.pass) {
            c.detail = "exact";
        } else {
            const auto& m = diff.front();
            c.detail = std::to_string(diff.size()) + " cells differ, first " + m.row + "/" + m.column +
                       ": expected " + m.expected + " got " + m.actual;
        }
    });
}

}  // namespace winv
