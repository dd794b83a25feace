#ifndef HAHNEXP_RATIONAL_HPP
#define HAHNEXP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace hahnexp {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(num, den) = 1 and den > 0 at all times, which is
// exactly the canonical-form invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parse "p/q", "p" or "-p/q". Whitespace is not tolerated.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

/// Exact integer n-th root: returns r with r^n = x if one exists.
std::optional<BigInt> integer_nth_root(const BigInt& x, unsigned n);

/// Exact rational n-th root of a positive rational, if representable.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

/// k! as a BigInt.
BigInt factorial(unsigned k);

/// q^e for integer e (e may be negative; q must be nonzero then).
Rational rational_pow(const Rational& q, long e);

} // namespace hahnexp

#endif
