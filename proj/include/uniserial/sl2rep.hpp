#pragma once

#include <utility>
#include <vector>

#include "uniserial/matrix.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

// Irreducible sl(2)-module V(a) on basis v_0..v_a:
//   e v_k = sqrt(k(a-k+1)) v_{k-1}, h v_k = (a-2k) v_k, f v_k = sqrt((k+1)(a-k)) v_{k+1}
// plus the same operators in the rescaled basis w_k = sqrt(binom(a,k)) v_k,
// where they act by integers: e w_k = (a-k+1) w_{k-1}, f w_k = (k+1) w_{k+1}.
struct Sl2Rep {
    int a = 0;
    Matrix<Surd> e, h, f;
    Matrix<Rational> er, hr, fr;
};

Sl2Rep sl2_matrices(int a);

// Diagonal D with D_kk = sqrt(k!(a-k)!); conjugating a v-basis operator by D
// yields the w-basis operator: M_w = D * M_v * D^{-1}.
std::vector<Surd> basis_rescale(int a);

// v_k^a maps to sign * (v_index^a)^* under the self-duality of V(a).
// Returns (sign, index) = ((-1)^{a-k}, a-k).
std::pair<int, int> dual_iso(int a, int k);

// h-homogeneous vector in some ambient graded space.
struct WeightVector {
    int weight = 0;
    std::vector<SurdSum> coords;
};

// Ambient sl(2) data needed for highest-weight analysis: the h-eigenvalue of
// each basis vector and the sparse raising operator.
struct AmbientSl2 {
    std::vector<int> weights;
    ColSparse<Surd> e;
};

AmbientSl2 ambient_of(const Sl2Rep& r);

// V(a) (x) V(b) with basis v_i^a (x) v_j^b at index i*(b+1)+j.
AmbientSl2 tensor_ambient(int a, int b);

// v_k^{a,b,c} = sum_{i,j} CG(a/2,a/2-i; b/2,b/2-j | c/2,c/2-k) v_i^a (x) v_j^b.
// TriangleViolation if (a/2,b/2,c/2) cannot couple; DomainError for bad k.
WeightVector cg_embedding(int a, int b, int c, int k);

// Highest weights (with multiplicity, ascending) of the span of vs, which
// must be closed under the ambient h and e actions (NotInvariant otherwise).
std::vector<int> hw_decompose(const AmbientSl2& amb,
                              const std::vector<WeightVector>& vs);

} // namespace uniserial
