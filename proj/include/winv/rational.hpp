#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace winv {

using Integer = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(const Integer& z) : q_(z) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    // "p" for integers, "p/q" otherwise
    std::string str() const;
    static Rational parse(std::string_view text);

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// 0 outside 0 <= k <= n; n < 0 is a scheduling bug
Rational binom(long n, long k);
const Integer& binom_z(long n, long k);

Rational exact_div(const Rational& num, const Rational& den, std::string_view context = {});
Integer assert_integral(const Rational& v, std::string_view key = {});

// 2^e and (-2)^e for any integer e
Rational pow2(long e);
Rational pow_neg2(long e);
inline long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace winv
