#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "uniserial/rational.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

template <class T>
struct Matrix {
    int nr = 0, nc = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
    const T& operator()(int i, int j) const {
        return a[static_cast<size_t>(i) * nc + j];
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
};

template <class T>
bool matrix_is_zero(const Matrix<T>& m) {
    for (const T& x : m.a)
        if (!is_zero(x)) return false;
    return true;
}

// Column-major sparse matrix; per column a row-sorted list of entries.
template <class T>
struct ColSparse {
    int nr = 0, nc = 0;
    std::vector<std::vector<std::pair<int, T>>> col;

    ColSparse() = default;
    ColSparse(int r, int c) : nr(r), nc(c), col(static_cast<size_t>(c)) {}

    void add(int i, int j, const T& v) {
        if (is_zero(v)) return;
        auto& cj = col[static_cast<size_t>(j)];
        auto it = std::lower_bound(
            cj.begin(), cj.end(), i,
            [](const std::pair<int, T>& e, int row) { return e.first < row; });
        if (it != cj.end() && it->first == i) {
            it->second += v;
            if (is_zero(it->second)) cj.erase(it);
        } else {
            cj.insert(it, {i, v});
        }
    }

    bool empty() const {
        for (const auto& cj : col)
            if (!cj.empty()) return false;
        return true;
    }

    // y += A*x for dense x.
    template <class V>
    void apply(const std::vector<V>& x, std::vector<V>& y) const {
        for (int j = 0; j < nc; ++j) {
            if (is_zero(x[static_cast<size_t>(j)])) continue;
            for (const auto& [i, v] : col[static_cast<size_t>(j)])
                y[static_cast<size_t>(i)] += V(v) * x[static_cast<size_t>(j)];
        }
    }
};

template <class T>
ColSparse<T> compose(const ColSparse<T>& A, const ColSparse<T>& B) {
    // A*B, dims (A.nr x B.nc)
    ColSparse<T> out(A.nr, B.nc);
    for (int j = 0; j < B.nc; ++j)
        for (const auto& [k, bv] : B.col[static_cast<size_t>(j)])
            for (const auto& [i, av] : A.col[static_cast<size_t>(k)])
                out.add(i, j, av * bv);
    return out;
}

template <class T>
ColSparse<T> sparse_sub(const ColSparse<T>& A, const ColSparse<T>& B) {
    ColSparse<T> out = A;
    for (int j = 0; j < B.nc; ++j)
        for (const auto& [i, v] : B.col[static_cast<size_t>(j)]) out.add(i, j, -v);
    return out;
}

template <class T>
ColSparse<T> sparse_scale(const ColSparse<T>& A, const T& s) {
    ColSparse<T> out(A.nr, A.nc);
    if (is_zero(s)) return out;
    for (int j = 0; j < A.nc; ++j)
        for (const auto& [i, v] : A.col[static_cast<size_t>(j)]) out.add(i, j, v * s);
    return out;
}

} // namespace uniserial
