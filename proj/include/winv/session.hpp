#pragma once

#include "winv/memo.hpp"

#include <string>
#include <utility>

namespace winv {

enum class Pivot { Largest, Smallest };

// Knobs that select between equivalent evaluation routes.  Defaults give the
// table route; the others exist so the verify suites can recompute a value
// along a different path.
struct Options {
    bool effectiveness_filter = true;
    Pivot blowup_pivot = Pivot::Largest;
    bool p2_prefer_alt = false;       // pair relation wherever it applies
    bool twisted_prefer_alt = false;  // use the second twisted relation wherever it applies
    bool sixfold_prefer_alt = false;  // P3: second relation wherever it applies
    bool closed_forms = true;         // fiber-class closed forms for (P1)^3
    bool parity_shortcut = true;
    bool flip_k3mod4 = false;         // negate sixfold inputs with k = 3 mod 4
    bool blowup_keep_units = false;   // recurse through a=1 / b=1 entries instead of dropping them
};

class Session {
public:
    Session() = default;
    explicit Session(Options o) : opts_(o) {}
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const Options& options() const { return opts_; }
    MemoStore& store() { return store_; }
    const MemoStore& store() const { return store_; }

    Rational memo(const std::string& key, const MemoStore::Compute& f) {
        return store_.get_or_compute(key, f);
    }
    // same, rejecting a non-integral result
    Rational memo_integral(const std::string& key, const MemoStore::Compute& f) {
        return store_.get_or_compute(key, [&] {
            Rational v = f();
            assert_integral(v, key);
            return v;
        });
    }

private:
    Options opts_;
    MemoStore store_;
};

}  // namespace winv
