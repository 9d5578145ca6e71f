#include "uniserial/theory.hpp"

#include <algorithm>

#include "uniserial/errors.hpp"
#include "uniserial/sl2rep.hpp"

namespace uniserial {

namespace {

std::vector<int> cg_range(int a, int b) {
    std::vector<int> out;
    for (int c = std::abs(a - b); c <= a + b; c += 2) out.push_back(c);
    return out;
}

bool has_layer(const ZTypeSpec& s, int w) {
    if (w < s.a || (w - s.a) % s.m != 0) return false;
    return (w - s.a) / s.m <= s.l;
}

} // namespace

std::vector<int> ZTypeSpec::socle_layers() const {
    std::vector<int> out;
    for (int i = 0; i <= l; ++i) out.push_back(a + i * m);
    if (kind == ModKind::Zdual) std::reverse(out.begin(), out.end());
    return out;
}

UniserialSpec ZTypeSpec::to_spec() const {
    return kind == ModKind::Z ? spec_z(m, a, l) : spec_zdual(m, a, l);
}

ZTypeSpec ztype(ModKind kind, int m, int a, int l) {
    if (kind != ModKind::Z && kind != ModKind::Zdual)
        throw SpecInvalid("ztype: kind must be Z or Zd");
    ZTypeSpec s;
    s.kind = l == 0 ? ModKind::Z : kind;
    s.m = m;
    s.a = a;
    s.l = l;
    check_spec(s.to_spec());
    return s;
}

ZTypeSpec ztype_dual(const ZTypeSpec& s) {
    ModKind flipped = s.kind == ModKind::Z ? ModKind::Zdual : ModKind::Z;
    return ztype(flipped, s.m, s.a, s.l);
}

ZTypeSpec ztype_of(const UniserialSpec& s) {
    if (s.kind != ModKind::Z && s.kind != ModKind::Zdual)
        throw SpecInvalid("not a chain module spec: " + s.str());
    return ztype(s.kind, s.m, s.a, s.l);
}

std::optional<S1Data> s1_closed(const ZTypeSpec& v1, const ZTypeSpec& v2) {
    if (v1.m != v2.m) throw MixedM("s1_closed: factors have different m");
    if (v1.l != 1 || v2.l != 1)
        throw LengthMismatch("s1_closed needs two length-2 chain modules, got " +
                             v1.str() + " and " + v2.str());
    int a = v1.socle_weight(), b = v1.top_weight();
    int c = v2.socle_weight(), d = v2.top_weight();
    bool dual1 = v1.kind == ModKind::Zdual;
    bool dual2 = v2.kind == ModKind::Zdual;

    int mu;
    int sign = 1;
    if (!dual1 && !dual2) {
        mu = a + d;
    } else if (!dual1 && dual2) {
        if (a > d) return std::nullopt;
        mu = d - a;
    } else if (dual1 && !dual2) {
        if (b < c) return std::nullopt;
        mu = b - c;
        sign = v1.m % 2 == 0 ? 1 : -1;
    } else {
        return std::nullopt;
    }

    S1Data out;
    out.mu = mu;
    out.c1 = surd_canon(Rational(1), Rational(d + 1));
    out.c2 = surd_canon(Rational(-sign), Rational(b + 1));
    out.x1 = a;
    out.y1 = d;
    out.x2 = b;
    out.y2 = c;
    return out;
}

std::vector<SurdSum> s1_vector(const S1Data& d, const GmModule& V,
                               const GmModule& W) {
    if (V.layers.size() != 2 || W.layers.size() != 2 ||
        V.layers[0] != d.x1 || V.layers[1] != d.x2 ||
        W.layers[0] != d.y2 || W.layers[1] != d.y1)
        throw DomainError("s1_vector: modules do not match the slice data");

    std::vector<SurdSum> u(static_cast<size_t>(V.dim) * W.dim);
    auto place = [&](const Surd& coef, int x, int y, int vlayer, int wlayer) {
        WeightVector emb = cg_embedding(x, y, d.mu, 0);
        for (int i = 0; i <= x; ++i)
            for (int j = 0; j <= y; ++j) {
                const SurdSum& e = emb.coords[static_cast<size_t>(i * (y + 1) + j)];
                if (e.is_zero()) continue;
                int row = (V.layer_offset(vlayer) + i) * W.dim +
                          W.layer_offset(wlayer) + j;
                u[static_cast<size_t>(row)] += SurdSum(coef) * e;
            }
    };
    place(d.c1, d.x1, d.y1, 0, 1);
    place(d.c2, d.x2, d.y2, 1, 0);
    return u;
}

SocPrediction soc_closed(const ZTypeSpec& V, const ZTypeSpec& W) {
    if (V.m != W.m) throw MixedM("soc_closed: factors have different m");
    int m = V.m;
    int a0 = V.socle_weight(), b0 = W.socle_weight();
    bool dual1 = V.kind == ModKind::Zdual;
    bool dual2 = W.kind == ModKind::Zdual;

    SocPrediction p;
    p.a2 = cg_range(a0, b0);
    p.graded[0] = p.a2;

    int cap = std::min(V.l, W.l);
    for (int t = 1; t <= V.l + W.l; ++t) {
        std::vector<int> st;
        if (t <= cap) {
            if (!dual1 && !dual2) {
                st.push_back(a0 + b0 + t * m);
            } else if (!dual1 && dual2) {
                if (a0 <= b0 - t * m) st.push_back(b0 - a0 - t * m);
            } else if (dual1 && !dual2) {
                if (b0 <= a0 - t * m) st.push_back(a0 - b0 - t * m);
            }
        }
        p.am.insert(p.am.end(), st.begin(), st.end());
        if (!st.empty()) ++p.t_cap;
        p.graded[t] = std::move(st);
    }
    std::sort(p.am.begin(), p.am.end());

    p.total = p.a2;
    p.total.insert(p.total.end(), p.am.begin(), p.am.end());
    std::sort(p.total.begin(), p.total.end());
    return p;
}

std::optional<std::vector<std::vector<int>>> soc_series_closed(
    const ZTypeSpec& V, const ZTypeSpec& W) {
    if (V.m != W.m) throw MixedM("soc_series_closed: factors have different m");
    int m = V.m;
    bool dual1 = V.kind == ModKind::Zdual;
    bool dual2 = W.kind == ModKind::Zdual;
    int a0 = V.socle_weight(), b0 = W.socle_weight();

    bool reduces = V.l == 0 || W.l == 0 || (dual1 && dual2) ||
                   (!dual1 && dual2 && b0 < a0 + m) ||
                   (dual1 && !dual2 && a0 < b0 + m);
    if (!reduces) return std::nullopt;

    std::vector<int> la = V.socle_layers(), lb = W.socle_layers();
    std::vector<std::vector<int>> levels;
    for (int t = 0; t <= V.l + W.l; ++t) {
        std::vector<int> lvl;
        for (int i = 0; i <= V.l; ++i) {
            int j = t - i;
            if (j < 0 || j > W.l) continue;
            auto r = cg_range(la[static_cast<size_t>(i)], lb[static_cast<size_t>(j)]);
            lvl.insert(lvl.end(), r.begin(), r.end());
        }
        std::sort(lvl.begin(), lvl.end());
        levels.push_back(std::move(lvl));
    }
    return levels;
}

int hom_dim(const ZTypeSpec& V, const ZTypeSpec& W) {
    if (V.m != W.m) throw MixedM("hom_dim: modules have different m");
    return has_layer(V, W.socle_weight()) && has_layer(W, V.top_weight()) ? 1 : 0;
}

int invariants_dim(const ZTypeSpec& V, const ZTypeSpec& W) {
    if (V.m != W.m) throw MixedM("invariants_dim: modules have different m");
    return has_layer(V, W.socle_weight()) && has_layer(W, V.socle_weight()) ? 1
                                                                            : 0;
}

std::optional<S1Conjecture> s1_conjecture(const UniserialSpec& v1,
                                          const UniserialSpec& v2) {
    if (v1.m != v2.m) throw MixedM("s1_conjecture: factors have different m");
    if (v1.length() != 2 || v2.length() != 2)
        throw LengthMismatch("s1_conjecture needs two length-2 uniserials, got " +
                             v1.str() + " and " + v2.str());
    int m = v1.m;
    std::vector<int> l1 = v1.layer_list(), l2 = v2.layer_list();
    int a = l1[0], b = l1[1], c = l2[0], d = l2[1];
    if (!(a < c || (a == c && b <= d)))
        throw OrderingViolated("s1_conjecture requires socle-ordered factors: (" +
                               v1.str() + ", " + v2.str() + ")");

    auto hit = [](int mu, const char* id, bool boundary = false) {
        return S1Conjecture{mu, id, boundary};
    };
    if (a == 0 && b == m) return hit(d, "1");
    if (a > 0) {
        if (a + b == m && c + d == m && d - a == b - c && d >= a)
            return hit(d - a, "2.1", d == a);
        if (b - a == m && d - c == m) return hit(d + a, "2.2");
        if (b - a == m && c - d == m && d - a == c - b && d >= a)
            return hit(d - a, "2.3", d == a);
    }
    if (c == b && d == a) return hit(0, "3");
    return std::nullopt;
}

} // namespace uniserial
