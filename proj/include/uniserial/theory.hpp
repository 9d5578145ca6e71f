#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniserial/gmod.hpp"
#include "uniserial/socle.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

// Chain module parameters: Z(a,l) with layers a, a+m, ..., a+lm (socle
// first) or its dual with the same layers reversed. Length-1 modules are
// normalized to kind Z.
struct ZTypeSpec {
    ModKind kind = ModKind::Z; // Z or Zdual
    int m = 1;
    int a = 0;
    int l = 0;

    std::vector<int> socle_layers() const; // socle decomposition, socle first
    int socle_weight() const { return kind == ModKind::Z ? a : a + l * m; }
    int top_weight() const { return kind == ModKind::Z ? a + l * m : a; }
    UniserialSpec to_spec() const;
    std::string str() const { return to_spec().str(); }

    bool operator==(const ZTypeSpec&) const = default;
};

ZTypeSpec ztype(ModKind kind, int m, int a, int l);
ZTypeSpec ztype_dual(const ZTypeSpec& s);
// SpecInvalid when the spec is not a chain module.
ZTypeSpec ztype_of(const UniserialSpec& s);

// The top graded socle slice of a product of two length-2 chain modules:
// its highest weight mu and the two-component highest weight vector
//   u0 = c1 * v0^{x1,y1,mu} + c2 * v0^{x2,y2,mu},
// components embedded in (layer 0 of V1)(x)(layer 1 of V2) and
// (layer 1 of V1)(x)(layer 0 of V2) respectively.
struct S1Data {
    int mu = 0;
    Surd c1, c2;
    int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

// LengthMismatch unless both inputs have l = 1. Empty when the table says
// the slice vanishes.
std::optional<S1Data> s1_closed(const ZTypeSpec& v1, const ZTypeSpec& v2);

// u0 materialized in the unitary basis of tensor(build(v1), build(v2)).
std::vector<SurdSum> s1_vector(const S1Data& d, const GmModule& V,
                               const GmModule& W);

// Closed-form socle of a product of chain modules: the step-2 progression
// (the socle(V)(x)socle(W) weights), the step-m progression from the upper
// grading levels, their union, and the per-level breakdown.
struct SocPrediction {
    std::vector<int> a2;
    std::vector<int> am;
    std::vector<int> total;                 // ascending multiset
    int t_cap = 0;                          // number of nonzero upper levels
    std::map<int, std::vector<int>> graded; // levels 0 .. l+l'
};

SocPrediction soc_closed(const ZTypeSpec& V, const ZTypeSpec& W);

// Closed-form socle series, defined exactly when the socle reduces to
// socle(V)(x)socle(W): one factor irreducible, both factors dual chains, or
// the mixed pairs whose progressions would collide. Levels 0 .. l+l'.
std::optional<std::vector<std::vector<int>>> soc_series_closed(
    const ZTypeSpec& V, const ZTypeSpec& W);

// Dimension of the g-homomorphism space V -> W: 1 when socle(W) matches a
// layer of V and the top layer of V matches a layer of W, else 0.
int hom_dim(const ZTypeSpec& V, const ZTypeSpec& W);

// Dimension of the g-invariants of V (x) W.
int invariants_dim(const ZTypeSpec& V, const ZTypeSpec& W);

// Conjectural top grading slice for arbitrary length-2 uniserials, keyed on
// the socle decompositions V(a)+V(b) and V(c)+V(d). Requires the normal
// order a < c, or a = c and b <= d (OrderingViolated otherwise).
// `boundary` marks the degenerate d = a edge of the two cases stated with
// a non-strict inequality.
struct S1Conjecture {
    int mu = 0;
    std::string case_id; // "1", "2.1", "2.2", "2.3", "3"
    bool boundary = false;
};

std::optional<S1Conjecture> s1_conjecture(const UniserialSpec& v1,
                                          const UniserialSpec& v2);

} // namespace uniserial
