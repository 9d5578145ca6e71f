#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uniserial/errors.hpp"
#include "uniserial/kernel.hpp"
#include "uniserial/sl2rep.hpp"

using namespace uniserial;

namespace {

Matrix<Surd> mul(const Matrix<Surd>& A, const Matrix<Surd>& B) {
    Matrix<Surd> C(A.nr, B.nc);
    for (int i = 0; i < A.nr; ++i)
        for (int j = 0; j < B.nc; ++j) {
            SurdSum acc;
            for (int k = 0; k < A.nc; ++k) acc += SurdSum(A(i, k) * B(k, j));
            auto s = acc.as_surd();
            REQUIRE(s.has_value());
            C(i, j) = *s;
        }
    return C;
}

Matrix<Surd> sub(const Matrix<Surd>& A, const Matrix<Surd>& B) {
    Matrix<Surd> C(A.nr, A.nc);
    for (int i = 0; i < A.nr; ++i)
        for (int j = 0; j < A.nc; ++j) {
            auto s = surd_try_add(A(i, j), -B(i, j));
            REQUIRE(s.has_value());
            C(i, j) = *s;
        }
    return C;
}

std::vector<WeightVector> standard_basis(const AmbientSl2& amb) {
    std::vector<WeightVector> vs;
    for (size_t i = 0; i < amb.weights.size(); ++i) {
        WeightVector v;
        v.weight = amb.weights[i];
        v.coords.assign(amb.weights.size(), SurdSum());
        v.coords[i] = SurdSum::of(1);
        vs.push_back(std::move(v));
    }
    return vs;
}

} // namespace

TEST_CASE("defining matrices at small weight") {
    Sl2Rep r0 = sl2_matrices(0);
    CHECK(r0.e(0, 0).is_zero());
    CHECK(r0.h(0, 0).is_zero());
    CHECK(r0.f(0, 0).is_zero());

    Sl2Rep r1 = sl2_matrices(1);
    CHECK(r1.e(0, 1) == Surd::one());
    CHECK(r1.e(1, 0).is_zero());
    CHECK(r1.h(0, 0) == Surd::one());
    CHECK(r1.h(1, 1) == Surd::of(-1));
    CHECK(r1.f(1, 0) == Surd::one());

    Sl2Rep r2 = sl2_matrices(2);
    CHECK(r2.e(0, 1) == surd_canon(rat(1), rat(2)));
    CHECK(r2.e(1, 2) == surd_canon(rat(1), rat(2)));
    CHECK(r2.h(0, 0) == Surd::of(2));
    CHECK(r2.er(0, 1) == rat(2));
    CHECK(r2.er(1, 2) == rat(1));
    CHECK(r2.fr(1, 0) == rat(1));
    CHECK(r2.fr(2, 1) == rat(2));
}

TEST_CASE("commutation relations hold in both bases") {
    for (int a = 0; a <= 6; ++a) {
        Sl2Rep r = sl2_matrices(a);
        Matrix<Surd> ef = sub(mul(r.e, r.f), mul(r.f, r.e));
        CHECK(matrix_is_zero(sub(ef, r.h)));
        Matrix<Surd> he = sub(mul(r.h, r.e), mul(r.e, r.h));
        Matrix<Surd> e2 = r.e;
        for (auto& x : e2.a) x = surd_mul(x, rat(2));
        CHECK(matrix_is_zero(sub(he, e2)));
        Matrix<Surd> hf = sub(mul(r.h, r.f), mul(r.f, r.h));
        Matrix<Surd> f2 = r.f;
        for (auto& x : f2.a) x = surd_mul(x, rat(-2));
        CHECK(matrix_is_zero(sub(hf, f2)));

        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= a; ++j) {
                Rational efr(0), fer(0);
                for (int k = 0; k <= a; ++k) {
                    efr += r.er(i, k) * r.fr(k, j);
                    fer += r.fr(i, k) * r.er(k, j);
                }
                CHECK(efr - fer == r.hr(i, j));
            }
    }
}

TEST_CASE("diagonal rescale conjugates between the bases") {
    for (int a = 0; a <= 6; ++a) {
        Sl2Rep r = sl2_matrices(a);
        std::vector<Surd> D = basis_rescale(a);
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= a; ++j) {
                Surd lhs = D[size_t(i)] * r.e(i, j);
                Surd rhs = surd_mul(D[size_t(j)], r.er(i, j));
                CHECK(lhs == rhs);
                Surd lf = D[size_t(i)] * r.f(i, j);
                Surd rf = surd_mul(D[size_t(j)], r.fr(i, j));
                CHECK(lf == rf);
            }
    }
    CHECK(basis_rescale(2)[0] == surd_canon(rat(1), rat(2)));
    CHECK(basis_rescale(2)[1] == Surd::one());
}

TEST_CASE("self-duality signs and indices") {
    CHECK(dual_iso(1, 0) == std::pair{-1, 1});
    CHECK(dual_iso(1, 1) == std::pair{1, 0});
    CHECK(dual_iso(0, 0) == std::pair{1, 0});
    CHECK(dual_iso(4, 1) == std::pair{-1, 3});

    // T e = (-e^T) T where T_{a-k,k} = (-1)^{a-k}
    for (int a = 0; a <= 6; ++a) {
        Sl2Rep r = sl2_matrices(a);
        Matrix<Surd> T(a + 1, a + 1);
        for (int k = 0; k <= a; ++k) {
            auto [s, idx] = dual_iso(a, k);
            T(idx, k) = Surd::of(s);
        }
        Matrix<Surd> Ed(a + 1, a + 1), Fd(a + 1, a + 1);
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= a; ++j) {
                Ed(i, j) = -r.e(j, i);
                Fd(i, j) = -r.f(j, i);
            }
        CHECK(matrix_is_zero(sub(mul(T, r.e), mul(Ed, T))));
        CHECK(matrix_is_zero(sub(mul(T, r.f), mul(Fd, T))));
    }
}

TEST_CASE("coupled embeddings: pinned vectors") {
    WeightVector top = cg_embedding(2, 3, 5, 0);
    CHECK(top.weight == 5);
    CHECK(top.coords[0] == SurdSum::of(1)); // stretched: v_0 (x) v_0
    for (size_t i = 1; i < top.coords.size(); ++i) CHECK(top.coords[i].is_zero());

    WeightVector sing = cg_embedding(1, 1, 0, 0);
    CHECK(sing.weight == 0);
    CHECK(sing.coords[1] == SurdSum(Surd(rat(1, 2), Int(2))));  // v_0 (x) v_1
    CHECK(sing.coords[2] == SurdSum(Surd(rat(-1, 2), Int(2)))); // v_1 (x) v_0
    CHECK(sing.coords[0].is_zero());
    CHECK(sing.coords[3].is_zero());

    CHECK_THROWS_AS(cg_embedding(1, 1, 3, 0), TriangleViolation);
    CHECK_THROWS_AS(cg_embedding(1, 1, 2, 5), DomainError);
}

TEST_CASE("coupled embeddings span irreducibles") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            AmbientSl2 amb = tensor_ambient(a, b);
            for (int c = std::abs(a - b); c <= a + b; c += 2) {
                std::vector<WeightVector> span;
                for (int k = 0; k <= c; ++k)
                    span.push_back(cg_embedding(a, b, c, k));
                auto hw = hw_decompose(amb, span);
                REQUIRE(hw == std::vector<int>{c});
            }
        }
}

TEST_CASE("highest weight content of full tensor products") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            AmbientSl2 amb = tensor_ambient(a, b);
            auto hw = hw_decompose(amb, standard_basis(amb));
            std::vector<int> expect;
            for (int c = std::abs(a - b); c <= a + b; c += 2) expect.push_back(c);
            REQUIRE(hw == expect);
        }
}

TEST_CASE("degenerate inputs for highest weight analysis") {
    AmbientSl2 amb = tensor_ambient(1, 1);
    CHECK(hw_decompose(amb, {}).empty());

    AmbientSl2 single = tensor_ambient(3, 0);
    auto hw = hw_decompose(single, standard_basis(single));
    CHECK(hw == std::vector<int>{3});

    // duplicate vectors do not inflate multiplicity
    std::vector<WeightVector> dup = standard_basis(amb);
    std::vector<WeightVector> twice = dup;
    twice.insert(twice.end(), dup.begin(), dup.end());
    CHECK(hw_decompose(amb, twice) == std::vector<int>{0, 2});
}

TEST_CASE("closure violations are rejected") {
    AmbientSl2 amb = tensor_ambient(1, 1);

    WeightVector mixed;
    mixed.weight = 2;
    mixed.coords.assign(4, SurdSum());
    mixed.coords[0] = SurdSum::of(1); // weight 2
    mixed.coords[1] = SurdSum::of(1); // weight 0
    CHECK_THROWS_AS(hw_decompose(amb, {mixed}), NotInvariant);

    WeightVector lone; // v_1 (x) v_1, weight -2: e-image nonzero, span too small
    lone.weight = -2;
    lone.coords.assign(4, SurdSum());
    lone.coords[3] = SurdSum::of(1);
    CHECK_THROWS_AS(hw_decompose(amb, {lone}), NotInvariant);
}
