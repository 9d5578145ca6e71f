#pragma once

#include <vector>

#include "uniserial/matrix.hpp"

namespace uniserial {

// Right nullspace basis of M over the rationals.
// Fraction-free (Bareiss) elimination; pivot = first nonzero entry scanning
// top to bottom. Each basis vector is scaled to coprime integer entries with
// positive first nonzero coordinate; vectors are ordered by free column.
std::vector<std::vector<Rational>> rat_kernel(const Matrix<Rational>& M);

int rat_rank(const Matrix<Rational>& M);

// Right nullspace over the multiquadratic field generated by the entries.
// Guards against radicand blowup: at most 8 distinct nontrivial radicands
// may appear in M (RadicandExplosion otherwise). Basis vectors are the
// reduced-echelon parametric solutions, sign-normalized on the first
// nonzero coordinate.
std::vector<std::vector<SurdSum>> surdsum_kernel(const Matrix<SurdSum>& M);

int surdsum_rank(const Matrix<SurdSum>& M);

// Generic dispatch for templated callers.
inline std::vector<std::vector<Rational>> field_kernel(const Matrix<Rational>& M) {
    return rat_kernel(M);
}
inline std::vector<std::vector<SurdSum>> field_kernel(const Matrix<SurdSum>& M) {
    return surdsum_kernel(M);
}
inline int field_rank(const Matrix<Rational>& M) { return rat_rank(M); }
inline int field_rank(const Matrix<SurdSum>& M) { return surdsum_rank(M); }

} // namespace uniserial
