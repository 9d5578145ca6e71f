#include "uniserial/sl2rep.hpp"

#include <algorithm>
#include <map>

#include "uniserial/clebsch.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/kernel.hpp"

namespace uniserial {

Sl2Rep sl2_matrices(int a) {
    if (a < 0) throw DomainError("sl2_matrices: negative highest weight");
    const int n = a + 1;
    Sl2Rep r;
    r.a = a;
    r.e = Matrix<Surd>(n, n);
    r.h = Matrix<Surd>(n, n);
    r.f = Matrix<Surd>(n, n);
    r.er = Matrix<Rational>(n, n);
    r.hr = Matrix<Rational>(n, n);
    r.fr = Matrix<Rational>(n, n);
    for (int k = 0; k < n; ++k) {
        r.h(k, k) = Surd::of(a - 2 * k);
        r.hr(k, k) = rat(a - 2 * k);
        if (k > 0) {
            r.e(k - 1, k) = surd_canon(rat(1), rat(long(k) * (a - k + 1)));
            r.er(k - 1, k) = rat(a - k + 1);
        }
        if (k < a) {
            r.f(k + 1, k) = surd_canon(rat(1), rat(long(k + 1) * (a - k)));
            r.fr(k + 1, k) = rat(k + 1);
        }
    }
    return r;
}

std::vector<Surd> basis_rescale(int a) {
    std::vector<Surd> d(static_cast<size_t>(a) + 1);
    for (int k = 0; k <= a; ++k)
        d[static_cast<size_t>(k)] =
            surd_canon(rat(1), Rational(factorial(k) * factorial(a - k)));
    return d;
}

std::pair<int, int> dual_iso(int a, int k) {
    if (k < 0 || k > a) throw DomainError("dual_iso: index out of range");
    return {pow_m1(a - k), a - k};
}

AmbientSl2 ambient_of(const Sl2Rep& r) {
    AmbientSl2 amb;
    const int n = r.a + 1;
    amb.weights.resize(static_cast<size_t>(n));
    amb.e = ColSparse<Surd>(n, n);
    for (int k = 0; k < n; ++k) {
        amb.weights[static_cast<size_t>(k)] = r.a - 2 * k;
        if (k > 0) amb.e.add(k - 1, k, r.e(k - 1, k));
    }
    return amb;
}

AmbientSl2 tensor_ambient(int a, int b) {
    Sl2Rep A = sl2_matrices(a), B = sl2_matrices(b);
    const int n = (a + 1) * (b + 1);
    AmbientSl2 amb;
    amb.weights.resize(static_cast<size_t>(n));
    amb.e = ColSparse<Surd>(n, n);
    auto idx = [b](int i, int j) { return i * (b + 1) + j; };
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            amb.weights[static_cast<size_t>(idx(i, j))] = (a - 2 * i) + (b - 2 * j);
            if (i > 0) amb.e.add(idx(i - 1, j), idx(i, j), A.e(i - 1, i));
            if (j > 0) amb.e.add(idx(i, j - 1), idx(i, j), B.e(j - 1, j));
        }
    return amb;
}

WeightVector cg_embedding(int a, int b, int c, int k) {
    if (!triangle(HalfInt(a), HalfInt(b), HalfInt(c)))
        throw TriangleViolation("cg_embedding: weights cannot couple");
    if (k < 0 || k > c) throw DomainError("cg_embedding: index out of range");
    WeightVector v;
    v.weight = c - 2 * k;
    v.coords.assign(static_cast<size_t>((a + 1) * (b + 1)), SurdSum());
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            Surd coef = cg(HalfInt(a), HalfInt(a - 2 * i), HalfInt(b),
                           HalfInt(b - 2 * j), HalfInt(c), HalfInt(c - 2 * k));
            if (!coef.is_zero())
                v.coords[static_cast<size_t>(i * (b + 1) + j)] = SurdSum(coef);
        }
    return v;
}

namespace {

// rank of the matrix whose columns are the given coordinate vectors
int span_rank(const std::vector<const WeightVector*>& vs, size_t dim) {
    if (vs.empty()) return 0;
    Matrix<SurdSum> M(static_cast<int>(dim), static_cast<int>(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c)
        for (size_t r = 0; r < dim; ++r) M(static_cast<int>(r), static_cast<int>(c)) = vs[c]->coords[r];
    return surdsum_rank(M);
}

} // namespace

std::vector<int> hw_decompose(const AmbientSl2& amb,
                              const std::vector<WeightVector>& vs) {
    const size_t dim = amb.weights.size();
    std::map<int, std::vector<const WeightVector*>> by_weight;
    for (const auto& v : vs) {
        if (v.coords.size() != dim)
            throw NotInvariant("hw_decompose: coordinate length mismatch");
        bool nonzero = false;
        for (size_t i = 0; i < dim; ++i)
            if (!v.coords[i].is_zero()) {
                nonzero = true;
                if (amb.weights[i] != v.weight)
                    throw NotInvariant("hw_decompose: vector not h-homogeneous");
            }
        if (nonzero) by_weight[v.weight].push_back(&v);
    }

    std::vector<int> out;
    for (const auto& [w, group] : by_weight) {
        // e maps weight w to w+2; closure demands e*span(group) lies in the
        // recorded span at w+2.
        std::vector<const WeightVector*> up;
        if (auto it = by_weight.find(w + 2); it != by_weight.end()) up = it->second;

        std::vector<std::vector<SurdSum>> images;
        for (const WeightVector* v : group) {
            std::vector<SurdSum> img(dim, SurdSum());
            amb.e.apply(v->coords, img);
            images.push_back(std::move(img));
        }

        const int up_rank = span_rank(up, dim);
        Matrix<SurdSum> closure(static_cast<int>(dim),
                                static_cast<int>(up.size() + images.size()));
        for (size_t c = 0; c < up.size(); ++c)
            for (size_t r = 0; r < dim; ++r)
                closure(static_cast<int>(r), static_cast<int>(c)) = up[c]->coords[r];
        for (size_t c = 0; c < images.size(); ++c)
            for (size_t r = 0; r < dim; ++r)
                closure(static_cast<int>(r), static_cast<int>(up.size() + c)) =
                    images[c][r];
        if (surdsum_rank(closure) != up_rank)
            throw NotInvariant("hw_decompose: span not closed under e");

        // highest-weight count at w: dim of the slice minus rank of e on it
        const int slice_dim = span_rank(group, dim);
        Matrix<SurdSum> E(static_cast<int>(dim), static_cast<int>(images.size()));
        for (size_t c = 0; c < images.size(); ++c)
            for (size_t r = 0; r < dim; ++r)
                E(static_cast<int>(r), static_cast<int>(c)) = images[c][r];
        int hw = slice_dim - surdsum_rank(E);
        for (int t = 0; t < hw; ++t) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace uniserial
