#include "uniserial/socle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "uniserial/errors.hpp"
#include "uniserial/kernel.hpp"

namespace uniserial {

namespace {

// A (x) I + I (x) B on index i*bd + j.
template <class T>
ColSparse<T> leibniz(const ColSparse<T>& A, const ColSparse<T>& B, int ad, int bd) {
    ColSparse<T> out(ad * bd, ad * bd);
    for (int c = 0; c < ad; ++c)
        for (const auto& [i, v] : A.col[static_cast<size_t>(c)])
            for (int j = 0; j < bd; ++j) out.add(i * bd + j, c * bd + j, v);
    for (int c = 0; c < bd; ++c)
        for (const auto& [j, v] : B.col[static_cast<size_t>(c)])
            for (int i = 0; i < ad; ++i) out.add(i * bd + j, i * bd + c, v);
    return out;
}

bool chain_decay(const GmModule& M) {
    if (M.spec && (M.spec->kind == ModKind::E3 || M.spec->kind == ModKind::E4))
        return false;
    for (const Arrow& ar : M.arrows)
        if (ar.to != ar.from - 1) return false;
    return true;
}

// Module data reduced to what the socle computations need, over a field F
// (exact rationals on the rationalized path, surd sums otherwise).
template <class F>
struct LinMod {
    int dim = 0;
    std::vector<int> weights;
    std::vector<int> tag; // bigrade level per index; empty when untagged
    ColSparse<F> E;
    std::vector<ColSparse<F>> r;
};

ColSparse<SurdSum> widen(const ColSparse<Surd>& A) {
    ColSparse<SurdSum> out(A.nr, A.nc);
    for (int j = 0; j < A.nc; ++j)
        for (const auto& [i, v] : A.col[static_cast<size_t>(j)])
            out.add(i, j, SurdSum(v));
    return out;
}

template <class F>
using SpVec = std::vector<std::pair<int, F>>;

template <class F>
F field_one();
template <>
Rational field_one<Rational>() { return Rational(1); }
template <>
SurdSum field_one<SurdSum>() { return SurdSum::of(1L); }

// Reduced column echelon over F, rows = ambient indices.
template <class F>
struct SocCore {
    std::vector<SpVec<F>> cols;
    std::vector<int> pivots;
    std::vector<int> hw;                  // ascending multiset
    std::vector<int> witness_weight;
    std::vector<SpVec<F>> witnesses;      // ambient supports
};

// v -= a*x (dense, equal length).
template <class F>
void submul(std::vector<F>& v, const F& a, const std::vector<F>& x) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(x[i])) v[i] = v[i] - a * x[i];
}

template <class F>
void rref_insert(std::vector<std::vector<F>>& cols, std::vector<int>& piv,
                 std::vector<F> v) {
    for (size_t k = 0; k < cols.size(); ++k) {
        const F& lead = v[static_cast<size_t>(piv[k])];
        if (!is_zero(lead)) {
            F a = lead;
            submul(v, a, cols[k]);
        }
    }
    int p = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) {
            p = static_cast<int>(i);
            break;
        }
    if (p < 0) return;
    F inv = field_one<F>() / v[static_cast<size_t>(p)];
    for (auto& x : v)
        if (!is_zero(x)) x = x * inv;
    for (size_t k = 0; k < cols.size(); ++k) {
        const F& at = cols[k][static_cast<size_t>(p)];
        if (!is_zero(at)) {
            F a = at;
            submul(cols[k], a, v);
        }
    }
    cols.push_back(std::move(v));
    piv.push_back(p);
}

// Joint kernel of all r-operators on the span of the given ambient columns
// (one h-weight slice). Returned vectors are slice-local dense coordinates.
template <class F>
std::vector<std::vector<F>> joint_kernel_slice(const LinMod<F>& M,
                                               const std::vector<int>& sl) {
    const size_t n = sl.size();
    std::vector<std::vector<F>> basis(n, std::vector<F>(n));
    for (size_t c = 0; c < n; ++c) basis[c][c] = field_one<F>();

    for (const auto& op : M.r) {
        if (basis.empty()) break;
        std::vector<std::map<int, F>> imgs(basis.size());
        for (size_t b = 0; b < basis.size(); ++b)
            for (size_t c = 0; c < n; ++c) {
                if (is_zero(basis[b][c])) continue;
                for (const auto& [i, v] : op.col[static_cast<size_t>(sl[c])]) {
                    auto& slot = imgs[b][i];
                    slot = slot + v * basis[b][c];
                }
            }
        std::map<int, int> used;
        for (auto& im : imgs)
            for (auto& [i, v] : im)
                if (!is_zero(v)) used.emplace(i, 0);
        if (used.empty()) continue;
        int row = 0;
        for (auto& [i, loc] : used) loc = row++;
        Matrix<F> K(row, static_cast<int>(basis.size()));
        for (size_t b = 0; b < basis.size(); ++b)
            for (auto& [i, v] : imgs[b])
                if (!is_zero(v)) K(used[i], static_cast<int>(b)) = v;
        auto kern = field_kernel(K);
        std::vector<std::vector<F>> next;
        next.reserve(kern.size());
        for (const auto& a : kern) {
            std::vector<F> nb(n);
            for (size_t b = 0; b < basis.size(); ++b)
                if (!is_zero(a[b]))
                    for (size_t c = 0; c < n; ++c)
                        if (!is_zero(basis[b][c])) nb[c] = nb[c] + a[b] * basis[b][c];
            next.push_back(std::move(nb));
        }
        basis = std::move(next);
    }
    return basis;
}

// Socle (joint kernel of the r-family) of the masked column set, with its
// highest weight multiset and one witness per highest weight copy.
template <class F>
SocCore<F> socle_core(const LinMod<F>& M, const std::vector<char>* mask) {
    std::map<int, std::vector<int>> slices;
    for (int i = 0; i < M.dim; ++i) {
        if (mask && !(*mask)[static_cast<size_t>(i)]) continue;
        slices[M.weights[static_cast<size_t>(i)]].push_back(i);
    }

    SocCore<F> out;
    std::map<int, int> counts;
    for (const auto& [w, sl] : slices) {
        auto kern = joint_kernel_slice(M, sl);
        if (kern.empty()) continue;

        std::vector<std::vector<F>> cols;
        std::vector<int> piv;
        for (auto& v : kern) rref_insert(cols, piv, std::move(v));

        // highest weight vectors: the E-kernel within this socle slice
        std::vector<std::map<int, F>> imgs(cols.size());
        for (size_t b = 0; b < cols.size(); ++b)
            for (size_t c = 0; c < sl.size(); ++c) {
                if (is_zero(cols[b][c])) continue;
                for (const auto& [i, v] : M.E.col[static_cast<size_t>(sl[c])]) {
                    auto& slot = imgs[b][i];
                    slot = slot + v * cols[b][c];
                }
            }
        std::map<int, int> used;
        for (auto& im : imgs)
            for (auto& [i, v] : im)
                if (!is_zero(v)) used.emplace(i, 0);
        std::vector<std::vector<F>> hw_coeff;
        if (used.empty()) {
            hw_coeff.assign(cols.size(), std::vector<F>(cols.size()));
            for (size_t b = 0; b < cols.size(); ++b) hw_coeff[b][b] = field_one<F>();
        } else {
            int row = 0;
            for (auto& [i, loc] : used) loc = row++;
            Matrix<F> K(row, static_cast<int>(cols.size()));
            for (size_t b = 0; b < cols.size(); ++b)
                for (auto& [i, v] : imgs[b])
                    if (!is_zero(v)) K(used[i], static_cast<int>(b)) = v;
            hw_coeff = field_kernel(K);
        }
        counts[w] += static_cast<int>(hw_coeff.size());
        for (const auto& a : hw_coeff) {
            std::vector<F> dense(sl.size());
            for (size_t b = 0; b < cols.size(); ++b)
                if (!is_zero(a[b]))
                    for (size_t c = 0; c < sl.size(); ++c)
                        if (!is_zero(cols[b][c]))
                            dense[c] = dense[c] + a[b] * cols[b][c];
            SpVec<F> wit;
            for (size_t c = 0; c < sl.size(); ++c)
                if (!is_zero(dense[c])) wit.emplace_back(sl[c], dense[c]);
            out.witness_weight.push_back(w);
            out.witnesses.push_back(std::move(wit));
        }

        for (size_t b = 0; b < cols.size(); ++b) {
            SpVec<F> sp;
            for (size_t c = 0; c < sl.size(); ++c)
                if (!is_zero(cols[b][c])) sp.emplace_back(sl[c], cols[b][c]);
            out.cols.push_back(std::move(sp));
            out.pivots.push_back(sl[static_cast<size_t>(piv[b])]);
        }
    }
    for (const auto& [w, k] : counts)
        for (int i = 0; i < k; ++i) out.hw.push_back(w);
    return out;
}

// Quotient by the socle: keep the non-pivot coordinates, project actions
// along the reduced echelon basis.
template <class F>
LinMod<F> quotient(const LinMod<F>& M, const SocCore<F>& S) {
    std::vector<int> piv_col(static_cast<size_t>(M.dim), -1);
    for (size_t k = 0; k < S.pivots.size(); ++k)
        piv_col[static_cast<size_t>(S.pivots[k])] = static_cast<int>(k);

    std::vector<int> keep, local(static_cast<size_t>(M.dim), -1);
    for (int i = 0; i < M.dim; ++i)
        if (piv_col[static_cast<size_t>(i)] < 0) {
            local[static_cast<size_t>(i)] = static_cast<int>(keep.size());
            keep.push_back(i);
        }

    LinMod<F> Q;
    Q.dim = static_cast<int>(keep.size());
    Q.weights.reserve(keep.size());
    for (int i : keep) Q.weights.push_back(M.weights[static_cast<size_t>(i)]);
    if (!M.tag.empty()) {
        Q.tag.reserve(keep.size());
        for (int i : keep) Q.tag.push_back(M.tag[static_cast<size_t>(i)]);
    }

    auto project = [&](const ColSparse<F>& op) {
        ColSparse<F> out(Q.dim, Q.dim);
        for (int k = 0; k < Q.dim; ++k) {
            std::map<int, F> y;
            for (const auto& [i, v] : op.col[static_cast<size_t>(keep[static_cast<size_t>(k)])])
                y.emplace(i, v);
            std::vector<std::pair<int, F>> hits;
            for (const auto& [i, v] : y)
                if (piv_col[static_cast<size_t>(i)] >= 0 && !is_zero(v))
                    hits.emplace_back(i, v);
            for (const auto& [i, v] : hits)
                for (const auto& [r, sv] :
                     S.cols[static_cast<size_t>(piv_col[static_cast<size_t>(i)])]) {
                    auto& slot = y[r];
                    slot = slot - v * sv;
                }
            for (const auto& [i, v] : y)
                if (piv_col[static_cast<size_t>(i)] < 0 && !is_zero(v))
                    out.add(local[static_cast<size_t>(i)], k, v);
        }
        return out;
    };

    Q.E = project(M.E);
    Q.r.reserve(M.r.size());
    for (const auto& op : M.r) Q.r.push_back(project(op));
    return Q;
}

LinMod<Rational> linmod_rational(const ColSparse<Rational>& E,
                                 const std::vector<ColSparse<Rational>>& r,
                                 const std::vector<int>& weights) {
    LinMod<Rational> M;
    M.dim = static_cast<int>(weights.size());
    M.weights = weights;
    M.E = E;
    M.r = r;
    return M;
}

LinMod<SurdSum> linmod_surd(const ColSparse<Surd>& E,
                            const std::vector<ColSparse<Surd>>& r,
                            const std::vector<int>& weights) {
    LinMod<SurdSum> M;
    M.dim = static_cast<int>(weights.size());
    M.weights = weights;
    M.E = widen(E);
    M.r.reserve(r.size());
    for (const auto& op : r) M.r.push_back(widen(op));
    return M;
}

SurdSum unitary_coord(const Rational& v, const Surd& scale) {
    return SurdSum(surd_mul(surd_inv(scale), v));
}

SurdSum unitary_coord(const SurdSum& v, const Surd&) { return v; }

// Witnesses back to the unitary basis, sign-normalized on the first nonzero
// coordinate.
template <class F>
SocleResult pack_result(const SocCore<F>& core, int dim,
                        const std::vector<Surd>* scale) {
    SocleResult res;
    res.weights = core.hw;
    // witnesses ordered like the multiset: ascending weight, kernel order
    std::vector<size_t> order(core.witnesses.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return core.witness_weight[x] < core.witness_weight[y];
    });
    for (size_t oi : order) {
        HwWitness w;
        w.weight = core.witness_weight[oi];
        w.coords.assign(static_cast<size_t>(dim), SurdSum());
        for (const auto& [i, v] : core.witnesses[oi])
            w.coords[static_cast<size_t>(i)] =
                unitary_coord(v, scale ? (*scale)[static_cast<size_t>(i)] : Surd::one());
        int flip = 0;
        for (const auto& c : w.coords)
            if (!c.is_zero()) {
                flip = lead_sign(c);
                break;
            }
        if (flip < 0)
            for (auto& c : w.coords) c = -c;
        res.witnesses.push_back(std::move(w));
    }
    return res;
}

template <class F>
std::vector<std::vector<int>> series_loop(LinMod<F> M) {
    std::vector<std::vector<int>> out;
    while (M.dim > 0) {
        auto soc = socle_core(M, nullptr);
        if (soc.cols.empty())
            throw EngineError("socle series stalled on a nonzero module");
        out.push_back(soc.hw);
        M = quotient(M, soc);
    }
    return out;
}

} // namespace

TensorModule tensor(const GmModule& A, const GmModule& B, int max_dim) {
    if (A.m != B.m) {
        std::ostringstream os;
        os << "tensor factors have m=" << A.m << " and m=" << B.m;
        throw MixedM(os.str());
    }
    TensorModule T;
    T.left = A;
    T.right = B;
    T.m = A.m;
    T.dim = A.dim * B.dim;
    if (max_dim > 0 && T.dim > max_dim) {
        std::ostringstream os;
        os << "tensor dimension " << T.dim << " exceeds cap " << max_dim;
        throw DimensionCap(os.str());
    }
    T.weights.resize(static_cast<size_t>(T.dim));
    T.bigrade.resize(static_cast<size_t>(T.dim));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
            const int idx = i * B.dim + j;
            T.weights[static_cast<size_t>(idx)] =
                A.weights[static_cast<size_t>(i)] + B.weights[static_cast<size_t>(j)];
            T.bigrade[static_cast<size_t>(idx)] = {A.layer_of[static_cast<size_t>(i)],
                                                   B.layer_of[static_cast<size_t>(j)]};
        }
    T.bigraded = chain_decay(A) && chain_decay(B);

    T.E = leibniz(A.E, B.E, A.dim, B.dim);
    T.F = leibniz(A.F, B.F, A.dim, B.dim);
    T.r_ops.reserve(static_cast<size_t>(T.m) + 1);
    for (int s = 0; s <= T.m; ++s)
        T.r_ops.push_back(leibniz(A.r_ops[static_cast<size_t>(s)],
                                  B.r_ops[static_cast<size_t>(s)], A.dim, B.dim));

    T.rationalizable = A.rationalizable && B.rationalizable;
    if (T.rationalizable) {
        T.E_rat = leibniz(A.E_rat, B.E_rat, A.dim, B.dim);
        T.F_rat = leibniz(A.F_rat, B.F_rat, A.dim, B.dim);
        T.r_rat.reserve(static_cast<size_t>(T.m) + 1);
        for (int s = 0; s <= T.m; ++s)
            T.r_rat.push_back(leibniz(A.r_rat[static_cast<size_t>(s)],
                                      B.r_rat[static_cast<size_t>(s)], A.dim, B.dim));
        T.basis_scale.resize(static_cast<size_t>(T.dim));
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < B.dim; ++j)
                T.basis_scale[static_cast<size_t>(i * B.dim + j)] =
                    A.basis_scale[static_cast<size_t>(i)] *
                    B.basis_scale[static_cast<size_t>(j)];
    }
    return T;
}

SocleResult socle_of(const GmModule& M) {
    if (M.rationalizable) {
        auto core = socle_core(linmod_rational(M.E_rat, M.r_rat, M.weights), nullptr);
        return pack_result(core, M.dim, &M.basis_scale);
    }
    auto core = socle_core(linmod_surd(M.E, M.r_ops, M.weights), nullptr);
    return pack_result(core, M.dim, nullptr);
}

SocleResult socle_of(const TensorModule& T) {
    if (T.rationalizable) {
        auto core = socle_core(linmod_rational(T.E_rat, T.r_rat, T.weights), nullptr);
        return pack_result(core, T.dim, &T.basis_scale);
    }
    auto core = socle_core(linmod_surd(T.E, T.r_ops, T.weights), nullptr);
    return pack_result(core, T.dim, nullptr);
}

std::map<int, SocleResult> graded_socle(const TensorModule& T) {
    if (!T.bigraded)
        throw NotBigraded("graded socle needs both factors to decay one layer per r step");
    const int max_t = static_cast<int>(T.left.layers.size()) - 1 +
                      static_cast<int>(T.right.layers.size()) - 1;
    std::map<int, SocleResult> out;
    for (int t = 0; t <= max_t; ++t) {
        std::vector<char> mask(static_cast<size_t>(T.dim), 0);
        for (int i = 0; i < T.dim; ++i)
            if (T.bigrade[static_cast<size_t>(i)].first +
                    T.bigrade[static_cast<size_t>(i)].second == t)
                mask[static_cast<size_t>(i)] = 1;
        if (T.rationalizable) {
            auto core = socle_core(linmod_rational(T.E_rat, T.r_rat, T.weights), &mask);
            out[t] = pack_result(core, T.dim, &T.basis_scale);
        } else {
            auto core = socle_core(linmod_surd(T.E, T.r_ops, T.weights), &mask);
            out[t] = pack_result(core, T.dim, nullptr);
        }
    }
    return out;
}

std::vector<std::vector<int>> socle_series(const GmModule& M) {
    if (M.rationalizable)
        return series_loop(linmod_rational(M.E_rat, M.r_rat, M.weights));
    return series_loop(linmod_surd(M.E, M.r_ops, M.weights));
}

std::vector<std::vector<int>> socle_series(const TensorModule& T) {
    if (T.rationalizable)
        return series_loop(linmod_rational(T.E_rat, T.r_rat, T.weights));
    return series_loop(linmod_surd(T.E, T.r_ops, T.weights));
}

std::string report_json(const SocleReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["left_spec"] = r.left_spec;
    j["right_spec"] = r.right_spec;
    j["method"] = r.method;
    j["socle"] = r.socle;
    if (r.graded) {
        nlohmann::json g = nlohmann::json::object();
        for (const auto& [t, ws] : *r.graded) g[std::to_string(t)] = ws;
        j["graded"] = g;
    }
    if (r.series) j["series"] = *r.series;
    if (r.agreement) j["agreement"] = *r.agreement;
    if (r.method != "oracle") j["conjectural"] = r.conjectural;
    return j.dump();
}

} // namespace uniserial
