#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "uniserial/errors.hpp"
#include "uniserial/rational.hpp"

namespace uniserial {

// Splits n >= 0 as s^2 * r with r squarefree; returns (s, r).
// Inputs here are products of small factorials, so trial division is cheap.
std::pair<Int, Int> extract_square(const Int& n);

// A single quadratic surd c*sqrt(n) with n a squarefree positive integer.
// Zero is represented as (0, 1); rationals as (c, 1).
struct Surd {
    Rational c;
    Int n;

    Surd() : c(0), n(1) {}
    Surd(Rational coeff, Int rad) : c(std::move(coeff)), n(std::move(rad)) {}

    static Surd zero() { return Surd(); }
    static Surd one() { return Surd(Rational(1), Int(1)); }
    static Surd of(const Rational& q) { return Surd(q, Int(1)); }
    static Surd of(long q) { return Surd(rat(q), Int(1)); }

    bool is_zero() const { return sgn(c) == 0; }
    bool is_rational() const { return n == 1; }
    // (c*sqrt(n))^2, always rational.
    Rational squared() const { return c * c * Rational(n); }
};

// coeff * sqrt(radicand) in canonical form; radicand must be >= 0.
Surd surd_canon(const Rational& coeff, const Rational& radicand);

Surd operator*(const Surd& a, const Surd& b);
Surd operator-(const Surd& a);
Surd surd_mul(const Surd& a, const Rational& q);
Surd surd_inv(const Surd& a);
Surd surd_div(const Surd& a, const Surd& b);
// Defined only when radicands agree (or one side is zero).
std::optional<Surd> surd_try_add(const Surd& a, const Surd& b);

bool operator==(const Surd& a, const Surd& b);
inline bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

// In-place add for single-radicand contexts; DomainError when radicands mix
// (callers needing mixed sums use SurdSum).
Surd& operator+=(Surd& a, const Surd& b);

inline bool is_zero(const Surd& s) { return s.is_zero(); }

// "p/q*sqrt(n)", "p/q" when n = 1, "0" for zero.
std::string to_string(const Surd& s);

// Finite sum of surds over distinct squarefree radicands. Closed under
// +,-,* and, away from zero, under division (conjugate rationalization).
struct SurdSum {
    std::map<Int, Rational> terms; // radicand -> coefficient, no zero entries

    SurdSum() = default;
    SurdSum(const Surd& s) {
        if (!s.is_zero()) terms.emplace(s.n, s.c);
    }
    static SurdSum of(const Rational& q) { return SurdSum(Surd::of(q)); }
    static SurdSum of(long q) { return SurdSum(Surd::of(q)); }

    bool is_zero() const { return terms.empty(); }
    std::optional<Surd> as_surd() const;

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
};

SurdSum operator+(SurdSum a, const SurdSum& b);
SurdSum operator-(SurdSum a, const SurdSum& b);
SurdSum operator*(const SurdSum& a, const SurdSum& b);
SurdSum operator-(const SurdSum& a);
SurdSum surdsum_inv(const SurdSum& a);
SurdSum operator/(const SurdSum& a, const SurdSum& b);

bool operator==(const SurdSum& a, const SurdSum& b);
inline bool operator!=(const SurdSum& a, const SurdSum& b) { return !(a == b); }

inline bool is_zero(const SurdSum& s) { return s.is_zero(); }

// Sign convention for display normalization: sign of the lowest-radicand term.
int lead_sign(const SurdSum& s);

std::string to_string(const SurdSum& s);

} // namespace uniserial
