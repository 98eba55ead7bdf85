#include "winv/rational.hpp"

#include "winv/error.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace winv {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid(s, true)) throw ParseError("bad rational '" + s + "'");
        return Rational(Integer(s, 10));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid(n, true) || !valid(d, false)) throw ParseError("bad rational '" + s + "'");
    Integer dz(d, 10);
    if (dz == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q(Integer(n, 10), dz);
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

constexpr long kTableRows = 256;

const std::vector<std::vector<Integer>>& pascal() {
    static std::vector<std::vector<Integer>> rows = [] {
        std::vector<std::vector<Integer>> t(kTableRows);
        for (long n = 0; n < kTableRows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (long k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return rows;
}

const Integer kZero = 0;

}  // namespace

const Integer& binom_z(long n, long k) {
    if (n < 0)
        throw SchedulingError("binomial with negative upper argument (" + std::to_string(n) +
                              ", " + std::to_string(k) + ")");
    if (k < 0 || k > n) return kZero;
    if (n < kTableRows) return pascal()[n][k];
    thread_local Integer big;
    mpz_bin_uiui(big.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return big;
}

Rational binom(long n, long k) { return Rational(binom_z(n, k)); }

Rational exact_div(const Rational& num, const Rational& den, std::string_view context) {
    if (den.is_zero())
        throw ArithmeticError("division by zero leading coefficient" +
                              (context.empty() ? std::string() : " in " + std::string(context)));
    return Rational(mpq_class(num.raw() / den.raw()));
}

Integer assert_integral(const Rational& v, std::string_view key) {
    if (!v.is_integer())
        throw ArithmeticError("non-integral value " + v.str() +
                              (key.empty() ? std::string() : " at " + std::string(key)));
    return v.numerator();
}

Rational pow2(long e) {
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return Rational(mpq_class(Integer(1), p));
}

Rational pow_neg2(long e) {
    Rational r = pow2(e);
    return sign_pow(e) < 0 ? -r : r;
}

}  // namespace winv
