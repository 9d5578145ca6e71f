#include "uniserial/factorize.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "uniserial/errors.hpp"

namespace uniserial {

namespace {

struct Split {
    std::vector<int> a2, am;
};

// Every way to carve soc into a gap-free step-2 progression (nonempty) and a
// step-m progression (possibly empty). Candidate step-2 parts are keyed by
// their endpoints, so this stays quadratic in the multiset size.
std::vector<Split> splits_of(const std::vector<int>& soc, int m) {
    std::vector<Split> out;
    std::set<int> elems(soc.begin(), soc.end());
    if (elems.size() != soc.size()) return out; // repeats never split
    auto stepped = [](const std::vector<int>& v, int step) {
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] - v[i - 1] != step) return false;
        return true;
    };
    for (int lo : elems)
        for (int hi : elems) {
            if (hi < lo || (hi - lo) % 2 != 0) continue;
            Split s;
            bool inside = true;
            for (int w = lo; w <= hi; w += 2) {
                if (!elems.count(w)) { inside = false; break; }
                s.a2.push_back(w);
            }
            if (!inside) continue;
            std::set<int> used(s.a2.begin(), s.a2.end());
            for (int w : elems)
                if (!used.count(w)) s.am.push_back(w);
            if (!stepped(s.am, m)) continue;
            out.push_back(std::move(s));
        }
    return out;
}

struct Candidate {
    std::string case_id;
    ZTypeSpec left, right;
};

// The case formulas, keyed on where the greatest weight lambda shows up.
// Each split pair can satisfy the preconditions of more than one case (both
// lengths zero, say); all applicable readings are returned and validation
// sorts them out.
std::vector<Candidate> apply_cases(const Split& s, const Split& sd, int m, int lambda) {
    std::vector<Candidate> out;
    const int max2 = s.a2.back(), min2 = s.a2.front();
    const int max2d = sd.a2.back(), min2d = sd.a2.front();
    auto steps = [m](int x) { return x >= 0 && x % m == 0 ? x / m : -1; };

    if (max2d == lambda) { // plain (x) plain
        int lp = s.am.empty() ? 0 : steps(s.am.back() - max2);
        int span = steps(max2d - max2);
        if (lp >= 0 && span >= lp) {
            int l = span - lp;
            int a, b;
            if ((l - lp) * m == min2d - min2) { a = (max2 + min2) / 2; b = (max2 - min2) / 2; }
            else { a = (max2 - min2) / 2; b = (max2 + min2) / 2; }
            out.push_back({"i", ztype(ModKind::Z, m, a, l), ztype(ModKind::Z, m, b, lp)});
        }
    }
    if (max2 == lambda) { // dual (x) dual
        int lp = sd.am.empty() ? 0 : steps(sd.am.back() - max2d);
        int span = steps(max2 - max2d);
        if (lp >= 0 && span >= lp) {
            int l = span - lp;
            int a, b;
            if ((l - lp) * m == min2 - min2d) { a = (max2d + min2d) / 2; b = (max2d - min2d) / 2; }
            else { a = (max2d - min2d) / 2; b = (max2d + min2d) / 2; }
            out.push_back({"ii", ztype(ModKind::Zdual, m, a, l), ztype(ModKind::Zdual, m, b, lp)});
        }
    }
    if (max2d != lambda && max2 != lambda) { // plain (x) dual
        int lp = steps(lambda - max2d);
        int l = steps(lambda - max2);
        if (lp >= 0 && l >= 0) {
            int a, b;
            if ((l + lp) * m == min2d - min2) { a = (max2 + min2) / 2; b = (max2 - min2) / 2 - lp * m; }
            else { a = (max2 - min2) / 2; b = (max2 + min2) / 2 - lp * m; }
            if (b >= 0)
                out.push_back({"iii", ztype(ModKind::Z, m, a, l), ztype(ModKind::Zdual, m, b, lp)});
        }
    }
    return out;
}

auto order_key(const ZTypeSpec& z) {
    return std::tuple(z.kind == ModKind::Zdual, z.a, z.l);
}

} // namespace

SocleSignature signature_of(const TensorModule& T) {
    SocleSignature sig;
    sig.m = T.m;
    sig.lambda = *std::max_element(T.weights.begin(), T.weights.end());
    sig.soc = socle_of(T).weights;
    TensorModule Td = tensor(dualize(T.left), dualize(T.right));
    sig.soc_dual = socle_of(Td).weights;
    std::sort(sig.soc.begin(), sig.soc.end());
    std::sort(sig.soc_dual.begin(), sig.soc_dual.end());
    return sig;
}

FactorizationResult recover(const SocleSignature& sig) {
    if (sig.m < 1) throw SpecInvalid("signature m must be positive");
    if (sig.m == 2)
        throw AmbiguousM2("step 2 collides with the weight lattice spacing; "
                          "factor recovery is not attempted at m = 2");
    if (sig.soc.empty() || sig.soc_dual.empty())
        throw NoCandidate("signature has an empty socle multiset");

    std::vector<int> soc = sig.soc, socd = sig.soc_dual;
    std::sort(soc.begin(), soc.end());
    std::sort(socd.begin(), socd.end());

    std::vector<FactorizationResult> found;
    std::set<std::pair<std::tuple<bool, int, int>, std::tuple<bool, int, int>>> seen;
    for (const Split& s : splits_of(soc, sig.m))
        for (const Split& sd : splits_of(socd, sig.m))
            for (const Candidate& c : apply_cases(s, sd, sig.m, sig.lambda)) {
                ZTypeSpec L = c.left, R = c.right;
                if (order_key(R) < order_key(L)) std::swap(L, R);
                FactorizationResult r{c.case_id, L, R, s.a2, s.am, sd.a2, sd.am};
                if (!verify(r, sig)) continue;
                if (seen.insert({order_key(L), order_key(R)}).second)
                    found.push_back(std::move(r));
            }

    if (found.empty())
        throw NoCandidate("no chain pair reproduces the signature");
    if (found.size() > 1) {
        std::string msg = "signature admits " + std::to_string(found.size()) + " factorizations:";
        for (const FactorizationResult& r : found)
            msg += " " + r.left.str() + " (x) " + r.right.str();
        throw MultipleCandidates(msg);
    }
    return found.front();
}

bool verify(const FactorizationResult& r, const SocleSignature& sig) {
    if (r.left.m != sig.m || r.right.m != sig.m) return false;
    int lambda = (r.left.a + r.left.l * sig.m) + (r.right.a + r.right.l * sig.m);
    if (lambda != sig.lambda) return false;
    std::vector<int> soc = sig.soc, socd = sig.soc_dual;
    std::sort(soc.begin(), soc.end());
    std::sort(socd.begin(), socd.end());
    return soc_closed(r.left, r.right).total == soc &&
           soc_closed(ztype_dual(r.left), ztype_dual(r.right)).total == socd;
}

} // namespace uniserial
