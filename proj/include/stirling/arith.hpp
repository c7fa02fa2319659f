#pragma once

// Exact arbitrary-precision arithmetic plus the combinatorial primitives
// (factorial, integer powers, binomial coefficients) everything else is
// built from.  Counting values overflow 64 bits already at modest sizes, so
// all counts are BigInt from the start.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace stirling {

using BigInt = boost::multiprecision::cpp_int;

// Always reduced to lowest terms with positive denominator (the backing
// type maintains this canonical form; construct via make_rational so a
// negative denominator never reaches the raw constructor).
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const BigRational& q) { return numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return denominator(q); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw parameter_error("rational with zero denominator");
    BigRational q(num);
    q /= den;
    return q;
}

// n!
inline BigInt factorial(long n) {
    if (n < 0) throw parameter_error("factorial of negative integer");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// x^e for e >= 0, with 0^0 = 1.
inline BigInt pow_int(const BigInt& x, long e) {
    if (e < 0) throw parameter_error("negative exponent");
    BigInt r = 1, base = x;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

// Binomial coefficient C(n, r), extended to negative upper index by
// C(n, r) = (-1)^r C(r - n - 1, r).  Zero when r < 0 or 0 <= n < r.
inline BigInt binomial(long n, long r) {
    if (r < 0) return 0;
    if (n < 0) {
        BigInt v = binomial(r - n - 1, r);
        return (r % 2 == 0) ? v : -v;
    }
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt num = 1, den = 1;
    for (long i = 1; i <= r; ++i) {
        num *= n - r + i;
        den *= i;
    }
    return num / den;  // exact: den always divides num
}

// Decimal rendering: integers as-is, rationals as "p/q" (or "p" when q = 1).
inline std::string to_decimal(const BigInt& v) { return v.str(); }
inline std::string to_decimal(const BigRational& q) { return q.str(); }

}  // namespace stirling
