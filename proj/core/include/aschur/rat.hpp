#pragma once

#include <gmpxx.h>
#include <string>

namespace aschur {

/**
 * Exact rational scalars.
 *
 * All arithmetic in this library is exact: coefficients are GMP rationals
 * (always kept in lowest terms with positive denominator by mpq_class).
 * There is no floating point anywhere.
 */
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// Canonical serialization: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Factorial as an exact rational.
inline Rat factorial(long n) {
    Rat r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Generalized binomial coefficient C(x, k) for integer x (possibly
// negative) and k >= 0; zero for k < 0.
inline Rat binom(long x, long k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) {
        Rat f(x - i, i + 1);
        f.canonicalize();
        r *= f;
    }
    return r;
}

} // namespace aschur
