#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "uniserial/kernel.hpp"
#include "uniserial/matrix.hpp"
#include "uniserial/rational.hpp"
#include "uniserial/surd.hpp"

using namespace uniserial;

TEST_CASE("rational helpers canonicalize") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat_str(rat(-1, 2)) == "-1/2");
    CHECK(rat_str(rat(5)) == "5");
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(-3) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(pow_m1(4) == 1);
    CHECK(pow_m1(7) == -1);
}

TEST_CASE("extract_square splits off the largest square") {
    CHECK(extract_square(Int(8)) == std::pair{Int(2), Int(2)});
    CHECK(extract_square(Int(1)) == std::pair{Int(1), Int(1)});
    CHECK(extract_square(Int(360)) == std::pair{Int(6), Int(10)});
    CHECK(extract_square(Int(49)) == std::pair{Int(7), Int(1)});
    Int big = factorial(12); // 12! = (2^10)(3^5)(5^2)(7)(11)
    auto [s, r] = extract_square(big);
    CHECK(s * s * r == big);
    CHECK(r == 231);
}

TEST_CASE("surd canonical form") {
    CHECK(surd_canon(rat(1), rat(8)) == Surd(rat(2), Int(2)));
    CHECK(to_string(surd_canon(rat(1), rat(8))) == "2*sqrt(2)");
    CHECK(surd_canon(rat(1), rat(9, 4)) == Surd(rat(3, 2), Int(1)));
    CHECK(to_string(surd_canon(rat(1), rat(9, 4))) == "3/2");
    CHECK(surd_canon(rat(0), rat(7)) == Surd::zero());
    CHECK(to_string(Surd::zero()) == "0");
    CHECK(surd_canon(rat(1), rat(1, 2)) == Surd(rat(1, 2), Int(2)));
    // zero keeps the canonical radicand 1
    CHECK(surd_canon(rat(0), rat(5)).n == 1);
}

TEST_CASE("surd ring operations") {
    Surd r2 = surd_canon(rat(1), rat(2));
    Surd r3 = surd_canon(rat(1), rat(3));
    CHECK(r2 * r3 == surd_canon(rat(1), rat(6)));
    CHECK(r2 * r2 == Surd::of(2));
    CHECK(surd_mul(r2, rat(-3, 2)) == Surd(rat(-3, 2), Int(2)));
    CHECK(-r2 == Surd(rat(-1), Int(2)));
    CHECK(surd_inv(r2) == Surd(rat(1, 2), Int(2)));
    CHECK(surd_div(r3, r2) == surd_canon(rat(1, 2), rat(6)));
    CHECK(surd_div(r2, r2) == Surd::one());

    auto same = surd_try_add(r2, surd_mul(r2, rat(3)));
    REQUIRE(same.has_value());
    CHECK(*same == surd_mul(r2, rat(4)));
    CHECK(!surd_try_add(r2, r3).has_value());
    CHECK(surd_try_add(r2, Surd::zero()).value() == r2);
    CHECK(surd_try_add(r2, -r2).value() == Surd::zero());

    CHECK(r2.squared() == rat(2));
    CHECK(Surd(rat(-2, 3), Int(5)).squared() == rat(20, 9));
}

TEST_CASE("surd sums: arithmetic and display") {
    SurdSum x = SurdSum(surd_canon(rat(1), rat(2))) + SurdSum::of(rat(1, 3));
    CHECK(to_string(x) == "1/3+1*sqrt(2)");
    SurdSum y = x - x;
    CHECK(y.is_zero());
    CHECK(to_string(y) == "0");
    CHECK(to_string(SurdSum::of(-1) + SurdSum(surd_canon(rat(-2), rat(5)))) ==
          "-1-2*sqrt(5)");

    // (1 + sqrt(2))(1 - sqrt(2)) = -1
    SurdSum a = SurdSum::of(1) + SurdSum(surd_canon(rat(1), rat(2)));
    SurdSum b = SurdSum::of(1) - SurdSum(surd_canon(rat(1), rat(2)));
    CHECK(a * b == SurdSum::of(-1));

    auto s = (SurdSum(surd_canon(rat(2), rat(3))) + SurdSum::of(0)).as_surd();
    REQUIRE(s.has_value());
    CHECK(*s == surd_canon(rat(2), rat(3)));
    CHECK(!(a + b).is_zero());
    CHECK(!x.as_surd().has_value());

    CHECK(lead_sign(b) == 1);          // lowest radicand term is +1
    CHECK(lead_sign(-b) == -1);
    CHECK(lead_sign(SurdSum()) == 0);
}

TEST_CASE("surd sum division is exact over multiquadratic values") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coef(-4, 4);
    const long rads[] = {1, 2, 3, 5, 6, 7, 10};
    for (int trial = 0; trial < 200; ++trial) {
        SurdSum x;
        for (long r : rads)
            if (int c = coef(rng); c != 0)
                x += SurdSum(surd_canon(rat(c), rat(r)));
        if (x.is_zero()) continue;
        SurdSum inv = surdsum_inv(x);
        CHECK(x * inv == SurdSum::of(1));
        SurdSum q = SurdSum(surd_canon(rat(3), rat(6))) / x;
        CHECK(q * x == SurdSum(surd_canon(rat(3), rat(6))));
    }
}

TEST_CASE("sparse columns accumulate and apply") {
    ColSparse<Rational> A(3, 2);
    A.add(0, 0, rat(1));
    A.add(2, 0, rat(2));
    A.add(2, 0, rat(-2)); // cancels
    A.add(1, 1, rat(-3));
    CHECK(A.col[0].size() == 1);
    std::vector<Rational> x{rat(5), rat(1)}, y(3, rat(0));
    A.apply(x, y);
    CHECK(y[0] == rat(5));
    CHECK(y[1] == rat(-3));
    CHECK(y[2] == rat(0));

    ColSparse<Rational> B(2, 2);
    B.add(0, 1, rat(1));
    B.add(1, 0, rat(1));
    auto AB = compose(A, B);
    CHECK(AB.nr == 3);
    CHECK(AB.nc == 2);
    std::vector<Rational> y2(3, rat(0));
    AB.apply(x, y2); // AB*x = A*(B*x), B*x = (1,5)
    CHECK(y2[0] == rat(1));
    CHECK(y2[1] == rat(-15));

    CHECK(sparse_sub(A, A).empty());
    CHECK(sparse_scale(A, rat(0)).empty());
}

namespace {

template <class T>
bool annihilates(const Matrix<T>& M, const std::vector<T>& v) {
    for (int i = 0; i < M.nr; ++i) {
        T acc{};
        for (int j = 0; j < M.nc; ++j) acc += M(i, j) * v[static_cast<size_t>(j)];
        if (!is_zero(acc)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rational kernel: goldens") {
    CHECK(rat_kernel(Matrix<Rational>::identity(2)).empty());

    Matrix<Rational> Z(2, 2);
    auto KZ = rat_kernel(Z);
    REQUIRE(KZ.size() == 2);
    CHECK(KZ[0] == std::vector<Rational>{rat(1), rat(0)});
    CHECK(KZ[1] == std::vector<Rational>{rat(0), rat(1)});

    Matrix<Rational> M(2, 2);
    M(0, 0) = rat(1);
    M(0, 1) = rat(2);
    M(1, 0) = rat(2);
    M(1, 1) = rat(4);
    auto K = rat_kernel(M);
    REQUIRE(K.size() == 1);
    // span{(-2,1)}, normalized to positive leading entry
    CHECK(K[0] == std::vector<Rational>{rat(2), rat(-1)});
    CHECK(annihilates(M, K[0]));
}

TEST_CASE("rational kernel: rank-nullity and scale invariance on random input") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> dim(1, 7), ent(-3, 3);
    for (int trial = 0; trial < 120; ++trial) {
        int nr = dim(rng), nc = dim(rng);
        Matrix<Rational> M(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                M(i, j) = rat(ent(rng), 1 + std::abs(ent(rng)));
        auto K = rat_kernel(M);
        CHECK(static_cast<int>(K.size()) + rat_rank(M) == nc);
        for (const auto& v : K) {
            CHECK(annihilates(M, v));
            // coprime integer entries, first nonzero positive
            Int g(0);
            int lead = 0;
            for (const auto& q : v) {
                CHECK(q.get_den() == 1);
                g = gcd(g, q.get_num());
                if (lead == 0) lead = sign_of(q);
            }
            CHECK(g == 1);
            CHECK(lead == 1);
        }

        Matrix<Rational> S = M;
        int row = std::uniform_int_distribution<int>(0, nr - 1)(rng);
        for (int j = 0; j < nc; ++j) S(row, j) *= rat(-7, 3);
        CHECK(rat_kernel(S) == K);
    }
}

TEST_CASE("surd sum kernel: goldens") {
    SurdSum r2 = SurdSum(surd_canon(rat(1), rat(2)));

    Matrix<SurdSum> A(1, 2);
    A(0, 0) = r2;
    A(0, 1) = SurdSum::of(-2);
    auto KA = surdsum_kernel(A);
    REQUIRE(KA.size() == 1);
    CHECK(KA[0][0] == r2);
    CHECK(KA[0][1] == SurdSum::of(1));

    // rank 1 over Q(sqrt 2)
    Matrix<SurdSum> B(2, 2);
    B(0, 0) = SurdSum::of(1);
    B(0, 1) = r2;
    B(1, 0) = r2;
    B(1, 1) = SurdSum::of(2);
    auto KB = surdsum_kernel(B);
    REQUIRE(KB.size() == 1);
    CHECK(annihilates(B, KB[0]));
    CHECK(surdsum_rank(B) == 1);

    Matrix<SurdSum> C(1, 2);
    C(0, 0) = SurdSum::of(1);
    C(0, 1) = SurdSum::of(1);
    auto KC = surdsum_kernel(C);
    REQUIRE(KC.size() == 1);
    CHECK(KC[0][0] == SurdSum::of(1));
    CHECK(KC[0][1] == SurdSum::of(-1));
}

TEST_CASE("surd sum kernel agrees with rational kernel on rational input") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 5), ent(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int nr = dim(rng), nc = dim(rng);
        Matrix<Rational> M(nr, nc);
        Matrix<SurdSum> S(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) {
                M(i, j) = rat(ent(rng));
                S(i, j) = SurdSum::of(M(i, j));
            }
        auto KM = rat_kernel(M);
        auto KS = surdsum_kernel(S);
        REQUIRE(KM.size() == KS.size());
        // spans agree: each normalized surd vector annihilates M
        for (const auto& v : KS) {
            std::vector<SurdSum> w = v;
            CHECK(annihilates(S, w));
        }
        CHECK(surdsum_rank(S) == rat_rank(M));
    }
}

TEST_CASE("surd sum kernel: single radicand class matches rationalized kernel") {
    // sqrt(3) * (rational matrix): nullspace unchanged
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> ent(-2, 2);
    Matrix<Rational> M(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) M(i, j) = rat(ent(rng));
    Matrix<SurdSum> S(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            S(i, j) = SurdSum(surd_mul(surd_canon(rat(1), rat(3)), M(i, j)));
    auto KM = rat_kernel(M);
    auto KS = surdsum_kernel(S);
    REQUIRE(KM.size() == KS.size());
    // same span, same free-column order: vectors pair up projectively
    for (size_t k = 0; k < KM.size(); ++k) {
        size_t lead = 0;
        while (is_zero(KM[k][lead])) ++lead;
        SurdSum scale = KS[k][lead] / SurdSum::of(KM[k][lead]);
        CHECK(!scale.is_zero());
        for (size_t j = 0; j < KM[k].size(); ++j)
            CHECK(KS[k][j] == scale * SurdSum::of(KM[k][j]));
    }
}

TEST_CASE("surd sum kernel: row scaling by a surd keeps the span") {
    Matrix<SurdSum> S(2, 3);
    S(0, 0) = SurdSum::of(1);
    S(0, 1) = SurdSum(surd_canon(rat(1), rat(2)));
    S(0, 2) = SurdSum::of(-1);
    S(1, 0) = SurdSum(surd_canon(rat(1), rat(3)));
    S(1, 1) = SurdSum::of(2);
    S(1, 2) = SurdSum::of(0);
    auto K = surdsum_kernel(S);

    Matrix<SurdSum> T = S;
    SurdSum f = SurdSum(surd_canon(rat(-5), rat(6)));
    for (int j = 0; j < 3; ++j) T(1, j) = T(1, j) * f;
    auto KT = surdsum_kernel(T);
    REQUIRE(K.size() == KT.size());
    for (const auto& v : KT) {
        std::vector<SurdSum> w = v;
        CHECK(annihilates(S, w));
    }
    for (const auto& v : K) {
        std::vector<SurdSum> w = v;
        CHECK(annihilates(T, w));
    }
}

TEST_CASE("surd sum kernel rejects too many radicands") {
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    Matrix<SurdSum> M(1, 9);
    for (int j = 0; j < 9; ++j)
        M(0, j) = SurdSum(surd_canon(rat(1), rat(primes[j])));
    CHECK_THROWS_AS(surdsum_kernel(M), RadicandExplosion);
}
