#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniserial/matrix.hpp"
#include "uniserial/rational.hpp"
#include "uniserial/sl2rep.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

enum class ModKind { Z, Zdual, E, E3, E4 };

// Symbolic description of a uniserial module of sl(2) |x V(m).
// Grammar: Z:a:l | Zd:a:l | E:a:b | E3:c | E4:p/q.
struct UniserialSpec {
    ModKind kind = ModKind::Z;
    int m = 1;
    int a = 0; // Z/Zdual socle weight; E lower weight
    int l = 0; // Z/Zdual composition length minus 1
    int b = 0; // E upper weight
    int c = 0; // E3 top layer weight
    Rational t = Rational(1); // E4 bent-arrow scalar

    std::vector<int> layer_list() const; // socle first
    int length() const;                  // composition length
    std::string str() const;

    bool operator==(const UniserialSpec& o) const;
};

UniserialSpec spec_z(int m, int a, int l);
UniserialSpec spec_zdual(int m, int a, int l);
UniserialSpec spec_e(int m, int a, int b);
UniserialSpec spec_e3(int m, int c);
UniserialSpec spec_e4(int m, const Rational& t);

// SpecInvalid (naming the violated constraint) when parameters are illegal.
void check_spec(const UniserialSpec& s);
UniserialSpec parse_spec(const std::string& text, int m);

// The m+1 component maps e_0..e_m of the r-action V(b) -> V(a):
//   e_s v_j^b = (-1)^j CG(a/2,a/2-i; b/2,j-b/2 | m/2,m/2-s) v_i^a,
// a single target index i = j+s+(a-b-m)/2 per (j,s).
std::vector<Matrix<Surd>> r_arrow(int a, int b, int m);

// One block of the r-action between two sl(2) layers.
struct Arrow {
    int from = 0, to = 0;           // layer indices; to = from-1, or from-2 (bent)
    std::vector<Matrix<Surd>> ops;  // indexed by s = 0..m
};

struct GmModule {
    int m = 1;
    std::vector<int> layers;   // sl(2) highest weights, socle first
    std::vector<int> offsets;  // offsets[i] = first basis index of layer i
    int dim = 0;
    std::vector<int> weights;  // h eigenvalue per basis index
    std::vector<int> layer_of; // layer index per basis index
    std::vector<Arrow> arrows;

    ColSparse<Surd> E, F;               // sl(2) raising/lowering
    std::vector<ColSparse<Surd>> r_ops; // e_0..e_m assembled from the arrows

    // Diagonal change of basis under which the sl(2) action is integral and,
    // when `rationalizable`, every e_s becomes sqrt(s!(m-s)!) times a rational
    // matrix (the stored core). Kernels may then be computed over Q.
    std::vector<Surd> basis_scale;
    ColSparse<Rational> E_rat, F_rat;
    bool rationalizable = false;
    std::vector<ColSparse<Rational>> r_rat; // cores; empty when not rationalizable

    std::optional<UniserialSpec> spec;

    int layer_offset(int i) const { return offsets[static_cast<size_t>(i)]; }
    int layer_dim(int i) const { return layers[static_cast<size_t>(i)] + 1; }
};

GmModule build(const UniserialSpec& spec);
inline GmModule build(const std::string& text, int m) {
    return build(parse_spec(text, m));
}

// Contragredient module through the self-duality of each layer; layer order
// reverses, arrows transpose with the alternating signs of that identification.
GmModule dualize(const GmModule& M);

// Same layers and arrows with every r-entry multiplied by q (sl(2) action
// untouched). Used to check that reports are normalization-independent.
GmModule scale_arrows(const GmModule& M, const Rational& q);

// Empty string when M satisfies commutativity of the e_s, sl(2)-equivariance
// of the r-action and (for built uniserials) the expected socle series;
// otherwise a description of the first violated identity.
std::string validate(const GmModule& M);

} // namespace uniserial
