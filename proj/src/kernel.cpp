#include "uniserial/kernel.hpp"

#include <set>

#include "uniserial/errors.hpp"

namespace uniserial {

namespace {

struct Echelon {
    // Integer row echelon data after fraction-free elimination.
    Matrix<Int> B;
    std::vector<int> pivot_col; // per eliminated row, ascending
    std::vector<int> free_col;
};

Echelon bareiss(const Matrix<Rational>& M) {
    const int rows = M.nr, cols = M.nc;
    Echelon ech;
    // Clear denominators row by row; row scaling does not change the kernel.
    std::vector<int> keep;
    Matrix<Int> B0(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Int l(1);
        bool nonzero = false;
        for (int j = 0; j < cols; ++j) {
            const Rational& q = M(i, j);
            if (sgn(q) != 0) {
                nonzero = true;
                l = lcm(l, q.get_den());
            }
        }
        if (!nonzero) continue;
        keep.push_back(i);
        for (int j = 0; j < cols; ++j) {
            const Rational& q = M(i, j);
            if (sgn(q) != 0)
                B0(static_cast<int>(keep.size()) - 1, j) =
                    q.get_num() * (l / q.get_den());
        }
    }
    const int r = static_cast<int>(keep.size());
    Matrix<Int> B(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) B(i, j) = B0(i, j);

    int rank = 0;
    Int prev(1);
    for (int c = 0; c < cols; ++c) {
        int p = -1;
        for (int i = rank; i < r; ++i)
            if (sgn(B(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            ech.free_col.push_back(c);
            continue;
        }
        if (p != rank)
            for (int j = 0; j < cols; ++j) std::swap(B(p, j), B(rank, j));
        const Int piv = B(rank, c);
        for (int i = rank + 1; i < r; ++i) {
            const Int bic = B(i, c);
            if (sgn(bic) == 0) {
                // Bareiss still rescales untouched rows to keep divisions exact.
                for (int j = c + 1; j < cols; ++j) {
                    if (sgn(B(i, j)) == 0) continue;
                    Int t = piv * B(i, j);
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    B(i, j) = t;
                }
            } else {
                for (int j = c + 1; j < cols; ++j) {
                    Int t = piv * B(i, j) - bic * B(rank, j);
                    if (sgn(t) != 0)
                        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    B(i, j) = t;
                }
                B(i, c) = 0;
            }
        }
        prev = piv;
        ech.pivot_col.push_back(c);
        ++rank;
    }
    ech.B = std::move(B);
    return ech;
}

void normalize_integer(std::vector<Rational>& v) {
    Int l(1);
    for (const Rational& q : v)
        if (sgn(q) != 0) l = lcm(l, q.get_den());
    Int g(0);
    for (Rational& q : v) {
        q *= Rational(l);
        q.canonicalize();
        if (sgn(q) != 0) g = gcd(g, q.get_num());
    }
    if (sgn(g) == 0) return;
    int lead = 0;
    for (const Rational& q : v) {
        if (sgn(q) != 0) {
            lead = sgn(q);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Rational& q : v) {
        q /= Rational(g);
        q.canonicalize();
    }
}

} // namespace

std::vector<std::vector<Rational>> rat_kernel(const Matrix<Rational>& M) {
    const int cols = M.nc;
    Echelon ech = bareiss(M);
    const int rank = static_cast<int>(ech.pivot_col.size());
    std::vector<std::vector<Rational>> basis;
    basis.reserve(ech.free_col.size());
    for (int f : ech.free_col) {
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        // Back-substitute through the echelon rows whose pivot is left of f.
        for (int i = rank - 1; i >= 0; --i) {
            int pc = ech.pivot_col[static_cast<size_t>(i)];
            if (pc > f) continue;
            Rational acc(0);
            for (int j = pc + 1; j <= f; ++j) {
                if (sgn(ech.B(i, j)) == 0 || sgn(v[static_cast<size_t>(j)]) == 0)
                    continue;
                acc += Rational(ech.B(i, j)) * v[static_cast<size_t>(j)];
            }
            v[static_cast<size_t>(pc)] = -acc / Rational(ech.B(i, pc));
            v[static_cast<size_t>(pc)].canonicalize();
        }
        normalize_integer(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rat_rank(const Matrix<Rational>& M) {
    return static_cast<int>(bareiss(M).pivot_col.size());
}

namespace {

struct SurdEchelon {
    Matrix<SurdSum> R; // reduced row echelon
    std::vector<int> pivot_col;
    std::vector<int> free_col;
};

SurdEchelon surd_rref(Matrix<SurdSum> A) {
    SurdEchelon ech;
    const int rows = A.nr, cols = A.nc;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (!A(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int j = c; j < cols; ++j) std::swap(A(p, j), A(rank, j));
        SurdSum inv = surdsum_inv(A(rank, c));
        for (int j = c; j < cols; ++j)
            if (!A(rank, j).is_zero()) A(rank, j) = A(rank, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || A(i, c).is_zero()) continue;
            SurdSum factor = A(i, c);
            for (int j = c; j < cols; ++j)
                if (!A(rank, j).is_zero()) A(i, j) -= factor * A(rank, j);
        }
        ech.pivot_col.push_back(c);
        ++rank;
    }
    size_t pi = 0;
    for (int c = 0; c < cols; ++c) {
        if (pi < ech.pivot_col.size() && ech.pivot_col[pi] == c)
            ++pi;
        else
            ech.free_col.push_back(c);
    }
    ech.R = std::move(A);
    return ech;
}

void check_radicands(const Matrix<SurdSum>& M) {
    std::set<Int> rads;
    for (const SurdSum& s : M.a)
        for (const auto& [n, c] : s.terms) {
            (void)c;
            if (n != 1) rads.insert(n);
        }
    if (rads.size() > 8)
        throw RadicandExplosion("surdsum_kernel: more than 8 distinct radicands");
}

} // namespace

std::vector<std::vector<SurdSum>> surdsum_kernel(const Matrix<SurdSum>& M) {
    check_radicands(M);
    SurdEchelon ech = surd_rref(M);
    const int cols = M.nc;
    std::vector<std::vector<SurdSum>> basis;
    for (int f : ech.free_col) {
        std::vector<SurdSum> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(f)] = SurdSum::of(1);
        for (size_t i = 0; i < ech.pivot_col.size(); ++i) {
            int pc = ech.pivot_col[i];
            if (pc > f) break;
            v[static_cast<size_t>(pc)] = -ech.R(static_cast<int>(i), f);
        }
        int ls = 0;
        for (const SurdSum& x : v)
            if (!x.is_zero()) {
                ls = lead_sign(x);
                break;
            }
        if (ls < 0)
            for (SurdSum& x : v) x = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

int surdsum_rank(const Matrix<SurdSum>& M) {
    check_radicands(M);
    return static_cast<int>(surd_rref(M).pivot_col.size());
}

} // namespace uniserial
