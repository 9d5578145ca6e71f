#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace uniserial {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own; always go through here.
inline Rational rat(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& n, const Int& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& n) { return Rational(n); }

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rational& q) { return q.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

inline Int factorial(long n) {
    // Small arguments only (combinatorial coefficients); cached per thread.
    thread_local std::vector<Int> cache{Int(1)};
    if (n < 0) return Int(0);
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    return cache[static_cast<size_t>(n)];
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline int pow_m1(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace uniserial
