#include "uniserial/clebsch.hpp"

#include <algorithm>
#include <cstdlib>

#include "uniserial/errors.hpp"

namespace uniserial {

namespace {

// Factorial of a half-integer that is known to be a nonnegative integer.
Int facth(HalfInt x) { return factorial(x.as_int()); }

} // namespace

bool triangle(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (j1.tw < 0 || j2.tw < 0 || j3.tw < 0) return false;
    if ((j1.tw + j2.tw + j3.tw) % 2 != 0) return false; // sum must be integral
    if (j3.tw > j1.tw + j2.tw) return false;
    if (j3.tw < std::abs(j1.tw - j2.tw)) return false;
    return true;
}

Surd delta_coeff(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (!triangle(j1, j2, j3)) return Surd::zero();
    Rational num = Rational(facth(j1 + j2 - j3)) * Rational(facth(j1 - j2 + j3)) *
                   Rational(facth(-j1 + j2 + j3));
    Rational den(facth(j1 + j2 + j3 + HalfInt::of_int(1)));
    return surd_canon(Rational(1), num / den);
}

namespace {

// Core evaluation; assumes the zero checks passed, m3 >= 0 and j1 >= j2.
Surd cg_core(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
    // Global square factor.
    Rational g2 = delta_coeff(j1, j2, j3).squared();
    g2 *= Rational(Int(j3.tw + 1)); // 2*j3 + 1
    g2 *= Rational(facth(j1 + m1) * facth(j1 - m1) * facth(j2 + m2) *
                   facth(j2 - m2) * facth(j3 + m3) * facth(j3 - m3));

    // Alternating sum over the internal index r.
    const int hi = std::min({(j1 + j2 - j3).as_int(), (j1 - m1).as_int(),
                             (j2 + m2).as_int()});
    const int lo = std::max({0, (j2 - j3 - m1).as_int(), (j1 + m2 - j3).as_int()});
    Rational sum(0);
    for (int r = lo; r <= hi; ++r) {
        Int den = factorial(r);
        den *= facth(j1 + j2 - j3 - HalfInt::of_int(r));
        den *= facth(j1 - m1 - HalfInt::of_int(r));
        den *= facth(j2 + m2 - HalfInt::of_int(r));
        den *= facth(j3 - j2 + m1 + HalfInt::of_int(r));
        den *= facth(j3 - j1 - m2 + HalfInt::of_int(r));
        Rational term = rat(Int(pow_m1(r)), den);
        sum += term;
    }
    return surd_canon(sum, g2);
}

} // namespace

Surd CgTable::cg(const CGKey& k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    auto [j1, m1, j2, m2, j3, m3] = k;
    Surd value = Surd::zero();
    const bool selection = (m1 + m2 == m3) && std::abs(m1.tw) <= j1.tw &&
                           std::abs(m2.tw) <= j2.tw && std::abs(m3.tw) <= j3.tw &&
                           (j1 - m1).is_integer() && (j2 - m2).is_integer() &&
                           (j3 - m3).is_integer();
    if (selection && triangle(j1, j2, j3)) {
        int sign = 1;
        const int phase = (j1 + j2 - j3).as_int();
        if (m3.tw < 0) { // flip all magnetic numbers
            m1 = -m1;
            m2 = -m2;
            m3 = -m3;
            sign *= pow_m1(phase);
        }
        if (j1 < j2) { // swap the two coupled factors
            std::swap(j1, j2);
            std::swap(m1, m2);
            sign *= pow_m1(phase);
        }
        value = surd_mul(cg_core(j1, m1, j2, m2, j3, m3), rat(sign));
    }
    memo_.emplace(k, value);
    return value;
}

Surd cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
    thread_local CgTable table;
    return table.cg(CGKey{j1, m1, j2, m2, j3, m3});
}

CGKey cg_special_key(CgSpecial kind, int a, int b, int i, int j) {
    const HalfInt ja(a), jb(b);
    switch (kind) {
        case CgSpecial::sum_top:
            return {ja, HalfInt(a - 2 * i), jb, HalfInt(b - 2 * j), HalfInt(a + b),
                    HalfInt(a + b - 2 * (i + j))};
        case CgSpecial::diff_a:
            return {ja, HalfInt(a - 2 * i), jb, HalfInt(2 * j - b), HalfInt(a - b),
                    HalfInt(a - b - 2 * i + 2 * j)};
        case CgSpecial::diff_b:
            return {ja, HalfInt(2 * i - a), jb, HalfInt(b - 2 * j), HalfInt(b - a),
                    HalfInt(b - a + 2 * i - 2 * j)};
        case CgSpecial::aligned: {
            const int c = a + b - 2 * (i + j);
            return {ja, HalfInt(a - 2 * i), jb, HalfInt(b - 2 * j), HalfInt(c),
                    HalfInt(c)};
        }
    }
    throw DomainError("cg_special_key: bad kind");
}

namespace {

Int fact_checked(long n, const char* what) {
    if (n < 0) throw DomainError(std::string("cg_special: negative factorial ") + what);
    return factorial(n);
}

} // namespace

Surd cg_special(CgSpecial kind, int a, int b, int i, int j) {
    if (a < 0 || b < 0) throw DomainError("cg_special: negative weight");
    switch (kind) {
        case CgSpecial::sum_top: {
            Rational num = Rational(fact_checked(a, "a") * fact_checked(b, "b") *
                                    fact_checked(a + b - i - j, "a+b-i-j") *
                                    fact_checked(i + j, "i+j"));
            Rational den = Rational(fact_checked(i, "i") * fact_checked(j, "j") *
                                    fact_checked(a + b, "a+b") *
                                    fact_checked(a - i, "a-i") *
                                    fact_checked(b - j, "b-j"));
            return surd_canon(Rational(1), num / den);
        }
        case CgSpecial::diff_a: {
            Rational num = Rational(fact_checked(a - i, "a-i") * fact_checked(i, "i") *
                                    fact_checked(b, "b") *
                                    fact_checked(a - b + 1, "a-b+1"));
            Rational den = Rational(fact_checked(a + 1, "a+1") * fact_checked(j, "j") *
                                    fact_checked(b - j, "b-j") *
                                    fact_checked(a - b - i + j, "a-b-i+j") *
                                    fact_checked(i - j, "i-j"));
            return surd_mul(surd_canon(Rational(1), num / den), rat(pow_m1(j)));
        }
        case CgSpecial::diff_b: {
            Rational num = Rational(fact_checked(b - j, "b-j") * fact_checked(j, "j") *
                                    fact_checked(a, "a") *
                                    fact_checked(b - a + 1, "b-a+1"));
            Rational den = Rational(fact_checked(b + 1, "b+1") * fact_checked(i, "i") *
                                    fact_checked(a - i, "a-i") *
                                    fact_checked(b - a - j + i, "b-a-j+i") *
                                    fact_checked(j - i, "j-i"));
            // Sign from swapping the coupled factors in the c = a-b form:
            // the exchange contributes (-1)^a on top of that form's (-1)^i.
            return surd_mul(surd_canon(Rational(1), num / den), rat(pow_m1(a + i)));
        }
        case CgSpecial::aligned: {
            Rational num =
                Rational(fact_checked(a + b - 2 * i - 2 * j + 1, "a+b-2i-2j+1") *
                         fact_checked(i + j, "i+j") * fact_checked(a - i, "a-i") *
                         fact_checked(b - j, "b-j"));
            Rational den =
                Rational(fact_checked(a + b - i - j + 1, "a+b-i-j+1") *
                         fact_checked(a - i - j, "a-i-j") *
                         fact_checked(b - i - j, "b-i-j") * fact_checked(i, "i") *
                         fact_checked(j, "j"));
            return surd_mul(surd_canon(Rational(1), num / den), rat(pow_m1(i)));
        }
    }
    throw DomainError("cg_special: bad kind");
}

} // namespace uniserial
