#include "hahnexp/rational.hpp"

#include "hahnexp/errors.hpp"

namespace hahnexp {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string rational_to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

std::optional<BigInt> integer_nth_root(const BigInt& x, unsigned n) {
    if (n == 0) return std::nullopt;
    if (x < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = integer_nth_root(-x, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (x == 0 || x == 1 || n == 1) return x;
    // binary search on [1, x]
    BigInt lo = 1, hi = x;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned i = 0; i < n; ++i) {
            p *= mid;
            if (p > x) { over = true; break; }
        }
        if (!over && p == x) return mid;
        if (over || p > x) hi = mid - 1; else lo = mid + 1;
    }
    return std::nullopt;
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
    if (q <= 0) return std::nullopt;
    auto rn = integer_nth_root(num(q), n);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(den(q), n);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

BigInt factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q == 0) throw DivisionByZero("rational_pow with negative exponent of 0");
        return Rational(1) / rational_pow(q, -e);
    }
    Rational r = 1, base = q;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

} // namespace hahnexp
