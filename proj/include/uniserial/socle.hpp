#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniserial/gmod.hpp"

namespace uniserial {

// Tensor product of two modules over the same g_m, with the componentwise
// (Leibniz) action. Basis vector i*right.dim + j is v_i (x) w_j.
struct TensorModule {
    GmModule left, right;
    int m = 1;
    int dim = 0;
    std::vector<int> weights;                  // h eigenvalue per basis index
    std::vector<std::pair<int, int>> bigrade;  // (left layer, right layer)
    bool bigraded = false; // both factors decay one layer per r application

    ColSparse<Surd> E, F;
    std::vector<ColSparse<Surd>> r_ops;

    std::vector<Surd> basis_scale;
    ColSparse<Rational> E_rat, F_rat;
    bool rationalizable = false;
    std::vector<ColSparse<Rational>> r_rat;

    int index(int i, int j) const { return i * right.dim + j; }
};

// MixedM when the factors live over different m. A positive max_dim caps the
// product dimension (DimensionCap beyond it); 0 means uncapped.
TensorModule tensor(const GmModule& A, const GmModule& B, int max_dim = 0);

// Exact highest weight vector, coordinates in the unitary basis of the
// module it was computed in. First nonzero coordinate normalized positive.
struct HwWitness {
    int weight = 0;
    std::vector<SurdSum> coords;
};

// Socle as an sl(2)-module: highest weights ascending with multiplicity,
// one witness per copy.
struct SocleResult {
    std::vector<int> weights;
    std::vector<HwWitness> witnesses;
};

// Joint kernel of e_0..e_m (the r-annihilated subspace), decomposed under
// sl(2). Rational elimination when the module is rationalizable, the
// multiquadratic fallback otherwise.
SocleResult socle_of(const GmModule& M);
SocleResult socle_of(const TensorModule& T);

// Socle slices S_t = (sum of the components with bigrade i+j = t)^r, one
// entry per t from 0 to l+l', empty multisets included. NotBigraded when a
// factor does not decay one layer per r application (the 3- and 4-step
// exceptional modules).
std::map<int, SocleResult> graded_socle(const TensorModule& T);

// Multisets of the successive socle quotients soc^{k+1}/soc^k, computed by
// exact quotient modules. Concatenated dimensions exhaust the module.
std::vector<std::vector<int>> socle_series(const GmModule& M);
std::vector<std::vector<int>> socle_series(const TensorModule& T);

// Flat report of one tensor socle computation, as printed by the CLI.
struct SocleReport {
    int m = 1;
    std::string left_spec, right_spec;
    std::string method = "oracle"; // "oracle" | "closed" | "both"
    bool conjectural = false;      // set only by conjecture-backed predictions
    std::vector<int> socle;
    std::optional<std::map<int, std::vector<int>>> graded;
    std::optional<std::vector<std::vector<int>>> series;
    std::optional<bool> agreement; // set when method == "both"
};

// Deterministic JSON: alphabetically sorted keys, optional sections omitted.
std::string report_json(const SocleReport& r);

} // namespace uniserial
