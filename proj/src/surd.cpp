#include "uniserial/surd.hpp"

#include <sstream>

namespace uniserial {

std::pair<Int, Int> extract_square(const Int& n) {
    if (sgn(n) < 0) throw DomainError("extract_square: negative argument");
    if (n == 0) return {Int(0), Int(1)};
    Int rest = n;
    Int sq(1);
    // Factor out small primes completely; radicands encountered here are
    // built from factorials of small integers, so this terminates quickly.
    auto pull = [&](unsigned long d) {
        unsigned int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++e;
        }
        for (unsigned int i = 0; i + 1 < e; i += 2) sq *= static_cast<long>(d);
        if (e % 2 == 1) return true; // one factor of d stays under the root
        return false;
    };
    std::vector<unsigned long> single;
    if (pull(2)) single.push_back(2);
    unsigned long d = 3;
    while (true) {
        Int d2 = Int(static_cast<long>(d)) * static_cast<long>(d);
        if (d2 > rest || d > 1000000UL) break;
        if (pull(d)) single.push_back(d);
        d += 2;
    }
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        sq *= r;
        rest = 1;
    }
    // Any remaining cofactor is squarefree for inputs produced by this
    // engine (all prime factors are small); it stays under the root.
    Int rad(1);
    for (unsigned long p : single) rad *= static_cast<long>(p);
    rad *= rest;
    return {sq, rad};
}

Surd surd_canon(const Rational& coeff, const Rational& radicand) {
    if (sgn(radicand) < 0) throw DomainError("surd_canon: negative radicand");
    if (sgn(coeff) == 0 || sgn(radicand) == 0) return Surd::zero();
    // sqrt(p/q) = sqrt(p*q)/q
    Int p = radicand.get_num();
    Int q = radicand.get_den();
    auto [s, r] = extract_square(p * q);
    Rational c = coeff * rat(s, q);
    return Surd(c, r);
}

Surd operator*(const Surd& a, const Surd& b) {
    if (a.is_zero() || b.is_zero()) return Surd::zero();
    Int g = gcd(a.n, b.n);
    Rational c = a.c * b.c * Rational(g);
    Int r = (a.n / g) * (b.n / g);
    return Surd(c, r);
}

Surd surd_mul(const Surd& a, const Rational& q) {
    if (a.is_zero() || sgn(q) == 0) return Surd::zero();
    return Surd(a.c * q, a.n);
}

Surd operator-(const Surd& a) { return a.is_zero() ? a : Surd(-a.c, a.n); }

Surd surd_inv(const Surd& a) {
    if (a.is_zero()) throw DomainError("surd_inv: zero");
    // 1/(c*sqrt(n)) = sqrt(n)/(c*n)
    return Surd(rat(Int(1), Int(1)) / (a.c * Rational(a.n)), a.n);
}

Surd surd_div(const Surd& a, const Surd& b) { return a * surd_inv(b); }

std::optional<Surd> surd_try_add(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.n != b.n) return std::nullopt;
    Rational c = a.c + b.c;
    if (sgn(c) == 0) return Surd::zero();
    return Surd(c, a.n);
}

bool operator==(const Surd& a, const Surd& b) { return a.c == b.c && a.n == b.n; }

Surd& operator+=(Surd& a, const Surd& b) {
    auto s = surd_try_add(a, b);
    if (!s) throw DomainError("surd +=: radicands differ");
    a = *s;
    return a;
}

std::string to_string(const Surd& s) {
    if (s.is_zero()) return "0";
    if (s.n == 1) return rat_str(s.c);
    return rat_str(s.c) + "*sqrt(" + int_str(s.n) + ")";
}

std::optional<Surd> SurdSum::as_surd() const {
    if (terms.empty()) return Surd::zero();
    if (terms.size() > 1) return std::nullopt;
    return Surd(terms.begin()->second, terms.begin()->first);
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [n, c] : o.terms) {
        auto it = terms.find(n);
        if (it == terms.end()) {
            terms.emplace(n, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms.erase(it);
        }
    }
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [n, c] : o.terms) {
        auto it = terms.find(n);
        if (it == terms.end()) {
            terms.emplace(n, -c);
        } else {
            it->second -= c;
            if (sgn(it->second) == 0) terms.erase(it);
        }
    }
    return *this;
}

SurdSum operator+(SurdSum a, const SurdSum& b) {
    a += b;
    return a;
}

SurdSum operator-(SurdSum a, const SurdSum& b) {
    a -= b;
    return a;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    for (const auto& [n1, c1] : a.terms)
        for (const auto& [n2, c2] : b.terms) {
            Surd t = Surd(c1, n1) * Surd(c2, n2);
            auto it = out.terms.find(t.n);
            if (it == out.terms.end()) {
                out.terms.emplace(t.n, t.c);
            } else {
                it->second += t.c;
                if (sgn(it->second) == 0) out.terms.erase(it);
            }
        }
    return out;
}

SurdSum operator-(const SurdSum& a) {
    SurdSum out;
    for (const auto& [n, c] : a.terms) out.terms.emplace(n, -c);
    return out;
}

namespace {

// Smallest prime factor of a small squarefree integer > 1.
unsigned long small_prime_factor(const Int& n) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return 2;
    unsigned long d = 3;
    while (true) {
        Int d2 = Int(static_cast<long>(d)) * static_cast<long>(d);
        if (d2 > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return d;
        d += 2;
    }
    return mpz_get_ui(n.get_mpz_t()); // n itself is prime (fits by construction)
}

} // namespace

SurdSum surdsum_inv(const SurdSum& a) {
    if (a.is_zero()) throw DomainError("surdsum_inv: zero");
    if (auto s = a.as_surd()) return SurdSum(surd_inv(*s));
    // Pick a prime p dividing some radicand, multiply by the conjugate that
    // flips sqrt(p); the product lives in the subring without p. Recurse.
    Int rad(1);
    for (const auto& [n, c] : a.terms) {
        (void)c;
        if (n > 1) {
            rad = n;
            break;
        }
    }
    unsigned long p = small_prime_factor(rad);
    SurdSum conj;
    for (const auto& [n, c] : a.terms)
        conj.terms.emplace(n, mpz_divisible_ui_p(n.get_mpz_t(), p) ? -c : c);
    SurdSum denom = a * conj;
    return conj * surdsum_inv(denom);
}

SurdSum operator/(const SurdSum& a, const SurdSum& b) { return a * surdsum_inv(b); }

bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms == b.terms; }

int lead_sign(const SurdSum& s) {
    if (s.terms.empty()) return 0;
    return sgn(s.terms.begin()->second);
}

std::string to_string(const SurdSum& s) {
    if (s.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : s.terms) {
        std::string t = to_string(Surd(c, n));
        if (!first && t[0] != '-') os << '+';
        os << t;
        first = false;
    }
    return os.str();
}

} // namespace uniserial
