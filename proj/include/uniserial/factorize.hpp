#pragma once

#include <string>
#include <vector>

#include "uniserial/socle.hpp"
#include "uniserial/theory.hpp"

namespace uniserial {

// What survives of a tensor product of two chain modules when only socles
// are observable: the greatest sl(2) weight plus the socle weight multisets
// of the module and of its dual.
struct SocleSignature {
    int m = 1;
    int lambda = 0;
    std::vector<int> soc;      // ascending
    std::vector<int> soc_dual; // ascending

    bool operator==(const SocleSignature&) const = default;
};

SocleSignature signature_of(const TensorModule& T);

// One recovered factorization plus the progression split that produced it.
struct FactorizationResult {
    std::string case_id; // "i", "ii", "iii"
    ZTypeSpec left, right;
    std::vector<int> a2, am;           // split of soc
    std::vector<int> a2_dual, am_dual; // split of soc_dual
};

// Inverts the signature to the unique unordered chain pair. Enumerates every
// split of each socle multiset into a full step-2 progression and a step-m
// progression, applies the case formulas keyed on where the greatest weight
// sits, and keeps the candidates whose regenerated signature matches.
// AmbiguousM2 at m = 2; NoCandidate when nothing validates; MultipleCandidates
// when validation fails to single one out.
FactorizationResult recover(const SocleSignature& sig);

// True iff the closed-form socles of left (x) right and of the dual pair,
// together with the top weight, reproduce sig exactly.
bool verify(const FactorizationResult& r, const SocleSignature& sig);

} // namespace uniserial
