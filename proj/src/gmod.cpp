#include "uniserial/gmod.hpp"

#include <algorithm>
#include <sstream>

#include "uniserial/clebsch.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/socle.hpp"

namespace uniserial {

std::vector<int> UniserialSpec::layer_list() const {
    std::vector<int> out;
    switch (kind) {
        case ModKind::Z:
            for (int i = 0; i <= l; ++i) out.push_back(a + i * m);
            break;
        case ModKind::Zdual:
            for (int i = l; i >= 0; --i) out.push_back(a + i * m);
            break;
        case ModKind::E:
            out = {a, b};
            break;
        case ModKind::E3:
            out = {0, m, c};
            break;
        case ModKind::E4:
            out = {0, m, m, 0};
            break;
    }
    return out;
}

int UniserialSpec::length() const {
    switch (kind) {
        case ModKind::Z:
        case ModKind::Zdual:
            return l + 1;
        case ModKind::E:
            return 2;
        case ModKind::E3:
            return 3;
        case ModKind::E4:
            return 4;
    }
    return 0;
}

std::string UniserialSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case ModKind::Z:
            os << "Z:" << a << ":" << l;
            break;
        case ModKind::Zdual:
            os << "Zd:" << a << ":" << l;
            break;
        case ModKind::E:
            os << "E:" << a << ":" << b;
            break;
        case ModKind::E3:
            os << "E3:" << c;
            break;
        case ModKind::E4:
            os << "E4:" << rat_str(t);
            break;
    }
    return os.str();
}

bool UniserialSpec::operator==(const UniserialSpec& o) const {
    if (kind != o.kind || m != o.m) return false;
    switch (kind) {
        case ModKind::Z:
        case ModKind::Zdual:
            return a == o.a && l == o.l;
        case ModKind::E:
            return a == o.a && b == o.b;
        case ModKind::E3:
            return c == o.c;
        case ModKind::E4:
            return t == o.t;
    }
    return false;
}

UniserialSpec spec_z(int m, int a, int l) {
    UniserialSpec s;
    s.kind = ModKind::Z;
    s.m = m;
    s.a = a;
    s.l = l;
    check_spec(s);
    return s;
}

UniserialSpec spec_zdual(int m, int a, int l) {
    UniserialSpec s = spec_z(m, a, l);
    s.kind = ModKind::Zdual;
    return s;
}

UniserialSpec spec_e(int m, int a, int b) {
    UniserialSpec s;
    s.kind = ModKind::E;
    s.m = m;
    s.a = a;
    s.b = b;
    check_spec(s);
    return s;
}

UniserialSpec spec_e3(int m, int c) {
    UniserialSpec s;
    s.kind = ModKind::E3;
    s.m = m;
    s.c = c;
    check_spec(s);
    return s;
}

UniserialSpec spec_e4(int m, const Rational& t) {
    UniserialSpec s;
    s.kind = ModKind::E4;
    s.m = m;
    s.t = t;
    check_spec(s);
    return s;
}

void check_spec(const UniserialSpec& s) {
    if (s.m < 1) throw SpecInvalid("m must be >= 1");
    switch (s.kind) {
        case ModKind::Z:
        case ModKind::Zdual:
            if (s.a < 0) throw SpecInvalid("Z type needs a >= 0");
            if (s.l < 0) throw SpecInvalid("Z type needs l >= 0");
            break;
        case ModKind::E:
            if (s.a < 0 || s.b < 0) throw SpecInvalid("E needs a,b >= 0");
            if ((s.a + s.b - s.m) % 2 != 0)
                throw SpecInvalid("E needs a+b = m (mod 2)");
            if (std::abs(s.a - s.b) > s.m)
                throw SpecInvalid("E needs |a-b| <= m");
            if (s.a + s.b < s.m) throw SpecInvalid("E needs m <= a+b");
            break;
        case ModKind::E3:
            if (s.c < 0 || s.c > 2 * s.m) throw SpecInvalid("E3 needs 0 <= c <= 2m");
            if (((s.c - 2 * s.m) % 4 + 4) % 4 != 0)
                throw SpecInvalid("E3 needs c = 2m (mod 4)");
            break;
        case ModKind::E4:
            if (s.m % 4 != 0) throw SpecInvalid("E4 needs m = 0 (mod 4)");
            if (sgn(s.t) == 0) throw SpecInvalid("E4 needs t != 0");
            break;
    }
}

UniserialSpec parse_spec(const std::string& text, int m) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);

    auto as_int = [&](const std::string& p) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(p, &pos);
        } catch (...) {
            throw SpecInvalid("bad integer '" + p + "' in spec '" + text + "'");
        }
        if (pos != p.size())
            throw SpecInvalid("bad integer '" + p + "' in spec '" + text + "'");
        return v;
    };

    const std::string& k = parts[0];
    if (k == "Z" || k == "Zd") {
        if (parts.size() != 3) throw SpecInvalid("expected " + k + ":a:l");
        int a = as_int(parts[1]), l = as_int(parts[2]);
        return k == "Z" ? spec_z(m, a, l) : spec_zdual(m, a, l);
    }
    if (k == "E") {
        if (parts.size() != 3) throw SpecInvalid("expected E:a:b");
        return spec_e(m, as_int(parts[1]), as_int(parts[2]));
    }
    if (k == "E3") {
        if (parts.size() != 2) throw SpecInvalid("expected E3:c");
        return spec_e3(m, as_int(parts[1]));
    }
    if (k == "E4") {
        if (parts.size() != 2) throw SpecInvalid("expected E4:t");
        const std::string& tv = parts[1];
        size_t slash = tv.find('/');
        Rational t;
        if (slash == std::string::npos) {
            t = rat(as_int(tv));
        } else {
            int num = as_int(tv.substr(0, slash));
            int den = as_int(tv.substr(slash + 1));
            if (den == 0) throw SpecInvalid("E4 scalar has zero denominator");
            t = rat(num, den);
        }
        return spec_e4(m, t);
    }
    throw SpecInvalid("unknown module kind '" + k + "'");
}

std::vector<Matrix<Surd>> r_arrow(int a, int b, int m) {
    if (!triangle(HalfInt(a), HalfInt(b), HalfInt(m)))
        throw TriangleViolation("r_arrow: weights (a,b,m) do not couple");
    std::vector<Matrix<Surd>> ops(static_cast<size_t>(m) + 1,
                                  Matrix<Surd>(a + 1, b + 1));
    for (int s = 0; s <= m; ++s)
        for (int j = 0; j <= b; ++j) {
            const int twice_i = 2 * j + 2 * s + (a - b - m);
            if (twice_i % 2 != 0) continue;
            const int i = twice_i / 2;
            if (i < 0 || i > a) continue;
            Surd coef = cg(HalfInt(a), HalfInt(a - 2 * i), HalfInt(b),
                           HalfInt(2 * j - b), HalfInt(m), HalfInt(m - 2 * s));
            if (!coef.is_zero())
                ops[static_cast<size_t>(s)](i, j) = surd_mul(coef, rat(pow_m1(j)));
        }
    return ops;
}

namespace {

// Offsets, weights, sl(2) action, assembled e_s and the rational path.
GmModule assemble(int m, std::vector<int> layers, std::vector<Arrow> arrows,
                  std::optional<UniserialSpec> spec) {
    GmModule M;
    M.m = m;
    M.layers = std::move(layers);
    M.arrows = std::move(arrows);
    M.spec = std::move(spec);

    const int L = static_cast<int>(M.layers.size());
    M.offsets.resize(static_cast<size_t>(L));
    int off = 0;
    for (int i = 0; i < L; ++i) {
        M.offsets[static_cast<size_t>(i)] = off;
        off += M.layers[static_cast<size_t>(i)] + 1;
    }
    M.dim = off;
    M.weights.resize(static_cast<size_t>(M.dim));
    M.layer_of.resize(static_cast<size_t>(M.dim));

    M.E = ColSparse<Surd>(M.dim, M.dim);
    M.F = ColSparse<Surd>(M.dim, M.dim);
    M.E_rat = ColSparse<Rational>(M.dim, M.dim);
    M.F_rat = ColSparse<Rational>(M.dim, M.dim);
    std::vector<std::vector<Surd>> D(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
        const int a = M.layers[static_cast<size_t>(i)];
        const int o = M.offsets[static_cast<size_t>(i)];
        Sl2Rep rep = sl2_matrices(a);
        D[static_cast<size_t>(i)] = basis_rescale(a);
        for (int k = 0; k <= a; ++k) {
            M.weights[static_cast<size_t>(o + k)] = a - 2 * k;
            M.layer_of[static_cast<size_t>(o + k)] = i;
            if (k > 0) {
                M.E.add(o + k - 1, o + k, rep.e(k - 1, k));
                M.E_rat.add(o + k - 1, o + k, rep.er(k - 1, k));
            }
            if (k < a) {
                M.F.add(o + k + 1, o + k, rep.f(k + 1, k));
                M.F_rat.add(o + k + 1, o + k, rep.fr(k + 1, k));
            }
        }
    }

    M.r_ops.assign(static_cast<size_t>(m) + 1, ColSparse<Surd>(M.dim, M.dim));
    for (const Arrow& ar : M.arrows) {
        const int ot = M.offsets[static_cast<size_t>(ar.to)];
        const int of = M.offsets[static_cast<size_t>(ar.from)];
        for (int s = 0; s <= m; ++s) {
            const Matrix<Surd>& U = ar.ops[static_cast<size_t>(s)];
            for (int i = 0; i < U.nr; ++i)
                for (int j = 0; j < U.nc; ++j)
                    if (!U(i, j).is_zero())
                        M.r_ops[static_cast<size_t>(s)].add(ot + i, of + j, U(i, j));
        }
    }

    // Scaled basis: within layer i multiply the w-basis diagonal by nu_i so
    // that consecutive arrows lose their common surd.
    std::vector<Surd> sigma(static_cast<size_t>(m) + 1);
    for (int s = 0; s <= m; ++s)
        sigma[static_cast<size_t>(s)] =
            surd_canon(rat(1), Rational(factorial(s) * factorial(m - s)));

    std::vector<Surd> nu(static_cast<size_t>(L), Surd::one());
    bool chain_ok = true;
    for (int i = 1; i < L && chain_ok; ++i) {
        const Arrow* consec = nullptr;
        for (const Arrow& ar : M.arrows)
            if (ar.from == i && ar.to == i - 1) consec = &ar;
        if (!consec) {
            nu[static_cast<size_t>(i)] = nu[static_cast<size_t>(i - 1)];
            continue;
        }
        Int rad(0);
        for (int s = 0; s <= m && chain_ok; ++s) {
            const Matrix<Surd>& U = consec->ops[static_cast<size_t>(s)];
            for (int r = 0; r < U.nr; ++r)
                for (int c2 = 0; c2 < U.nc; ++c2) {
                    if (U(r, c2).is_zero()) continue;
                    Surd x = D[static_cast<size_t>(i - 1)][static_cast<size_t>(r)] *
                             U(r, c2) *
                             surd_inv(D[static_cast<size_t>(i)][static_cast<size_t>(c2)]);
                    x = surd_div(x, sigma[static_cast<size_t>(s)]);
                    if (rad == 0)
                        rad = x.n;
                    else if (x.n != rad)
                        chain_ok = false;
                }
        }
        if (rad == 0) rad = 1;
        nu[static_cast<size_t>(i)] =
            nu[static_cast<size_t>(i - 1)] * Surd(rat(1), rad);
    }

    M.basis_scale.resize(static_cast<size_t>(M.dim));
    for (int i = 0; i < L; ++i) {
        const int o = M.offsets[static_cast<size_t>(i)];
        for (int k = 0; k <= M.layers[static_cast<size_t>(i)]; ++k)
            M.basis_scale[static_cast<size_t>(o + k)] =
                nu[static_cast<size_t>(i)] * D[static_cast<size_t>(i)][static_cast<size_t>(k)];
    }

    M.rationalizable = chain_ok;
    if (M.rationalizable) {
        M.r_rat.assign(static_cast<size_t>(m) + 1, ColSparse<Rational>(M.dim, M.dim));
        for (const Arrow& ar : M.arrows) {
            if (!M.rationalizable) break;
            const int ot = M.offsets[static_cast<size_t>(ar.to)];
            const int of = M.offsets[static_cast<size_t>(ar.from)];
            for (int s = 0; s <= m && M.rationalizable; ++s) {
                const Matrix<Surd>& U = ar.ops[static_cast<size_t>(s)];
                for (int i = 0; i < U.nr && M.rationalizable; ++i)
                    for (int j = 0; j < U.nc; ++j) {
                        if (U(i, j).is_zero()) continue;
                        Surd y = M.basis_scale[static_cast<size_t>(ot + i)] * U(i, j) *
                                 surd_inv(M.basis_scale[static_cast<size_t>(of + j)]);
                        y = surd_div(y, sigma[static_cast<size_t>(s)]);
                        if (!y.is_rational()) {
                            M.rationalizable = false;
                            break;
                        }
                        M.r_rat[static_cast<size_t>(s)].add(ot + i, of + j, y.c);
                    }
            }
        }
        if (!M.rationalizable) M.r_rat.clear();
    }
    return M;
}

} // namespace

GmModule build(const UniserialSpec& spec) {
    check_spec(spec);
    const int m = spec.m;

    // All kinds, duals included, are chains of the standard arrow between
    // consecutive layers; closed-form highest weight vectors are written in
    // this presentation. (dualize() yields the same modules up to a per-layer
    // sign, so iso-invariants agree either way.)
    std::vector<int> layers = spec.layer_list();
    std::vector<Arrow> arrows;
    for (size_t i = 1; i < layers.size(); ++i) {
        Arrow ar;
        ar.from = static_cast<int>(i);
        ar.to = static_cast<int>(i) - 1;
        ar.ops = r_arrow(layers[i - 1], layers[i], m);
        arrows.push_back(std::move(ar));
    }
    if (spec.kind == ModKind::E4) {
        Arrow bent;
        bent.from = 3;
        bent.to = 1;
        bent.ops = r_arrow(m, 0, m);
        for (auto& op : bent.ops)
            for (auto& x : op.a) x = surd_mul(x, spec.t);
        arrows.push_back(std::move(bent));
    }
    return assemble(m, std::move(layers), std::move(arrows), spec);
}

GmModule dualize(const GmModule& M) {
    const int L = static_cast<int>(M.layers.size());
    std::vector<int> layers(M.layers.rbegin(), M.layers.rend());
    std::vector<Arrow> arrows;
    for (const Arrow& ar : M.arrows) {
        const int a = M.layers[static_cast<size_t>(ar.to)];   // target weight
        const int b = M.layers[static_cast<size_t>(ar.from)]; // source weight
        Arrow d;
        d.from = L - 1 - ar.to;
        d.to = L - 1 - ar.from;
        d.ops.assign(static_cast<size_t>(M.m) + 1, Matrix<Surd>(b + 1, a + 1));
        for (int s = 0; s <= M.m; ++s) {
            const Matrix<Surd>& U = ar.ops[static_cast<size_t>(s)];
            for (int l = 0; l <= b; ++l)
                for (int k = 0; k <= a; ++k) {
                    const Surd& src = U(a - k, b - l);
                    if (!src.is_zero())
                        d.ops[static_cast<size_t>(s)](l, k) =
                            surd_mul(src, rat(-pow_m1((a - k) + (b - l))));
                }
        }
        arrows.push_back(std::move(d));
    }
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& x, const Arrow& y) { return x.from < y.from; });

    std::optional<UniserialSpec> spec;
    if (M.spec) {
        const UniserialSpec& s = *M.spec;
        switch (s.kind) {
            case ModKind::Z:
                spec = spec_zdual(s.m, s.a, s.l);
                break;
            case ModKind::Zdual:
                spec = spec_z(s.m, s.a, s.l);
                break;
            case ModKind::E:
                spec = spec_e(s.m, s.b, s.a);
                break;
            default:
                break; // dual of E3/E4 carries no classified name here
        }
    }
    return assemble(M.m, std::move(layers), std::move(arrows), std::move(spec));
}

GmModule scale_arrows(const GmModule& M, const Rational& q) {
    std::vector<Arrow> arrows = M.arrows;
    for (Arrow& ar : arrows)
        for (auto& op : ar.ops)
            for (auto& x : op.a) x = surd_mul(x, q);
    return assemble(M.m, M.layers, std::move(arrows), M.spec);
}

namespace {

ColSparse<SurdSum> widen(const ColSparse<Surd>& A) {
    ColSparse<SurdSum> out(A.nr, A.nc);
    for (int j = 0; j < A.nc; ++j)
        for (const auto& [i, v] : A.col[static_cast<size_t>(j)])
            out.add(i, j, SurdSum(v));
    return out;
}

std::string show_entry(int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

std::string first_nonzero(const ColSparse<SurdSum>& A) {
    for (int j = 0; j < A.nc; ++j)
        for (const auto& [i, v] : A.col[static_cast<size_t>(j)])
            if (!v.is_zero()) return show_entry(i, j);
    return "";
}

} // namespace

std::string validate(const GmModule& M) {
    const int m = M.m;
    std::vector<ColSparse<SurdSum>> e(static_cast<size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) e[static_cast<size_t>(s)] = widen(M.r_ops[static_cast<size_t>(s)]);
    ColSparse<SurdSum> E = widen(M.E), F = widen(M.F);
    ColSparse<SurdSum> H(M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i)
        if (M.weights[static_cast<size_t>(i)] != 0)
            H.add(i, i, SurdSum::of(M.weights[static_cast<size_t>(i)]));

    for (int s = 0; s <= m; ++s)
        for (int t = s + 1; t <= m; ++t) {
            auto C = sparse_sub(compose(e[static_cast<size_t>(s)], e[static_cast<size_t>(t)]),
                                compose(e[static_cast<size_t>(t)], e[static_cast<size_t>(s)]));
            if (!C.empty()) {
                std::ostringstream os;
                os << "[e_" << s << ",e_" << t << "] nonzero at " << first_nonzero(C);
                return os.str();
            }
        }

    Sl2Rep ad = sl2_matrices(m); // action of sl(2) on the basis e_0..e_m of r
    for (int s = 0; s <= m; ++s) {
        auto lhsE = sparse_sub(compose(E, e[static_cast<size_t>(s)]),
                               compose(e[static_cast<size_t>(s)], E));
        ColSparse<SurdSum> rhsE(M.dim, M.dim);
        if (s > 0) rhsE = sparse_scale(e[static_cast<size_t>(s - 1)], SurdSum(ad.e(s - 1, s)));
        if (!sparse_sub(lhsE, rhsE).empty()) {
            std::ostringstream os;
            os << "[E,e_" << s << "] mismatch at " << first_nonzero(sparse_sub(lhsE, rhsE));
            return os.str();
        }

        auto lhsH = sparse_sub(compose(H, e[static_cast<size_t>(s)]),
                               compose(e[static_cast<size_t>(s)], H));
        auto rhsH = sparse_scale(e[static_cast<size_t>(s)], SurdSum::of(m - 2 * s));
        if (!sparse_sub(lhsH, rhsH).empty()) {
            std::ostringstream os;
            os << "[H,e_" << s << "] mismatch at " << first_nonzero(sparse_sub(lhsH, rhsH));
            return os.str();
        }

        auto lhsF = sparse_sub(compose(F, e[static_cast<size_t>(s)]),
                               compose(e[static_cast<size_t>(s)], F));
        ColSparse<SurdSum> rhsF(M.dim, M.dim);
        if (s < m) rhsF = sparse_scale(e[static_cast<size_t>(s + 1)], SurdSum(ad.f(s + 1, s)));
        if (!sparse_sub(lhsF, rhsF).empty()) {
            std::ostringstream os;
            os << "[F,e_" << s << "] mismatch at " << first_nonzero(sparse_sub(lhsF, rhsF));
            return os.str();
        }
    }

    if (M.spec) {
        auto series = socle_series(M);
        const auto& layers = M.layers;
        if (series.size() != layers.size()) {
            std::ostringstream os;
            os << "socle series has " << series.size() << " levels, expected "
               << layers.size();
            return os.str();
        }
        for (size_t i = 0; i < layers.size(); ++i)
            if (series[i] != std::vector<int>{layers[i]}) {
                std::ostringstream os;
                os << "socle series level " << i << " is not V(" << layers[i] << ")";
                return os.str();
            }
    }
    return "";
}

} // namespace uniserial
