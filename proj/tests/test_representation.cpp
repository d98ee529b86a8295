#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotpair/builtin.hpp"

using namespace kp;

TEST_CASE("abelianization maps every arc to t") {
    KnotDiagram D = diagram_12a169();
    ArcRep f = abelianization_rep(D, NumberField::rationals());
    CHECK(f.dim == 1);
    for (int a = 0; a < D.narcs(); ++a)
        CHECK(f.M[a].at(0, 0) == Laurent::tpow(f.F, 1, FE(f.F, 1L)));
    CHECK_NOTHROW(f.check_wirtinger(D));
}

static std::vector<int> exps_of(const LMat& m) {
    // recover the zeta exponents of a 3x3 block-shift matrix
    Field F = m.e[0].field();
    std::vector<int> out;
    for (auto pos : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
        FE c = m.at(pos.first, pos.second).p.coeff(0);
        FE z(F), p(F, 1L);
        z.c[1] = 1;
        int e = 0;
        while (p != c && e < 5) {
            p = p * z;
            ++e;
        }
        REQUIRE(p == c);
        out.push_back(e % 5);
    }
    return out;
}

TEST_CASE("order-5 character propagates to the recorded label table") {
    KnotDiagram D = diagram_12a169();
    ArcRep f = rep_chi5(D);
    const int want[12][3] = {{0, 0, 0}, {3, 3, 4}, {0, 4, 1}, {4, 3, 3}, {4, 4, 2}, {0, 4, 1},
                             {0, 0, 0}, {1, 0, 4}, {1, 1, 3}, {2, 1, 2}, {2, 2, 1}, {0, 1, 4}};
    for (int a = 0; a < 12; ++a) {
        auto e = exps_of(f.M[a]);
        CHECK(e == std::vector<int>{want[a][0], want[a][1], want[a][2]});
    }
    CHECK_NOTHROW(f.check_wirtinger(D));
}

TEST_CASE("character arc matrices have unit determinant of t-degree 1") {
    KnotDiagram D = diagram_12a169();
    ArcRep f = rep_chi5(D);
    for (const auto& m : f.M) {
        Laurent d = detail::lmat_det(m);
        CHECK(d.p.deg() == 0);
        CHECK(d.lo() == 1);
        // coefficient is a root of unity
        FE c = d.p.coeff(0), p(f.F, 1L);
        bool root = false;
        for (int k = 0; k < 10; ++k) {
            p = p * c;
            if (p == FE(f.F, 1L)) {
                root = true;
                break;
            }
        }
        CHECK(root);
    }
}

TEST_CASE("inconsistent seeds are rejected") {
    KnotDiagram D = diagram_12a169();
    Field F = NumberField::cyclotomic(5);
    // b1 trivial but b7 (same propagation orbit) with a clashing label
    CHECK_THROWS_AS(induced_rep(D, F,
                                {{"b1", block_shift_matrix(F, {0, 0, 0})},
                                 {"b2", block_shift_matrix(F, {3, 3, 4})},
                                 {"b7", block_shift_matrix(F, {1, 2, 3})}}),
                    RepError);
    CHECK_THROWS_AS(propagate_rep(D, F, {}), RepError);
    CHECK_THROWS_AS(propagate_rep(D, F, {{"zz", block_shift_matrix(F, {0, 0, 0})}}), RepError);
}

TEST_CASE("trivial character gives the pure shift block everywhere") {
    KnotDiagram D = diagram_12a169();
    Field F = NumberField::cyclotomic(5);
    ArcRep f = induced_rep(D, F,
                           {{"b1", block_shift_matrix(F, {0, 0, 0})},
                            {"b2", block_shift_matrix(F, {0, 0, 0})}});
    for (int a = 0; a < 12; ++a) CHECK(f.M[a].e == block_shift_matrix(F, {0, 0, 0}).e);
}

TEST_CASE("figure-eight adjoint representation") {
    KnotDiagram D = parse_pd(PD_FIG8);
    Field F = with_trivial_involution(NumberField::cyclotomic(3));
    FE s(F, 1L), u(F);
    u.c[1] = 1;
    ArcRep f = elliptic_adjoint_rep(D, F, s, u, D.arcs[0], D.arcs[1]);
    CHECK(f.dim == 3);
    CHECK_NOTHROW(f.check_wirtinger(D));

    SUBCASE("genericity and relation failures") {
        CHECK_THROWS_AS(elliptic_adjoint_rep(D, F, s, FE(F, 1L), D.arcs[0], D.arcs[1]),
                        RepError); // u = 1
        CHECK_THROWS_AS(elliptic_adjoint_rep(D, F, s, FE(F, 2L), D.arcs[0], D.arcs[1]),
                        RepError); // relation violated
        Field C3 = NumberField::cyclotomic(3); // nontrivial involution: bar(s) != s
        FE s2(C3), u2(C3);
        s2.c[1] = 1;
        u2.c[1] = 1;
        CHECK_THROWS_AS(elliptic_adjoint_rep(D, C3, s2, u2, D.arcs[0], D.arcs[1]), RepError);
    }
}

TEST_CASE("adjoint action preserves the trace form") {
    // psi(Ad_g X, Ad_g Y) = psi(X, Y) with the 2h*h + e*f + f*e Gram
    Field F = NumberField::rationals();
    std::mt19937 rng(11);
    auto K = [&](const std::vector<FE>& x, const std::vector<FE>& y) {
        return FE(F, 2L) * x[0] * y[0] + x[1] * y[2] + x[2] * y[1];
    };
    for (int trial = 0; trial < 200; ++trial) {
        // random SL2 element as a product of elementary matrices
        FMat A(2, 2, FE(F));
        A.at(0, 0) = A.at(1, 1) = FE(F, 1L);
        for (int k = 0; k < 3; ++k) {
            FMat E(2, 2, FE(F));
            E.at(0, 0) = E.at(1, 1) = FE(F, 1L);
            long v = (long)(rng() % 7) - 3;
            if (k % 2)
                E.at(0, 1) = FE(F, v);
            else
                E.at(1, 0) = FE(F, v);
            A = A * E;
        }
        FMat ad = adjoint_matrix(A);
        std::vector<FE> x, y;
        for (int i = 0; i < 3; ++i) {
            x.push_back(FE(F, (long)(rng() % 9) - 4));
            y.push_back(FE(F, (long)(rng() % 9) - 4));
        }
        auto apply = [&](const FMat& m, const std::vector<FE>& v) {
            std::vector<FE> r(3, FE(F));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r[i] += m.at(i, j) * v[j];
            return r;
        };
        CHECK(K(apply(ad, x), apply(ad, y)) == K(x, y));
    }
}
