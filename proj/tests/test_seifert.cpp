#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpair/builtin.hpp"
#include "knotpair/seifert.hpp"

using namespace kp;

static Field Q = NumberField::rationals();

static const SeifertMatrix V_TREFOIL{{{-1, 1}, {0, -1}}};
static const SeifertMatrix V_FIG8{{{1, 1}, {0, -1}}};

TEST_CASE("order polynomial from a Seifert matrix") {
    CHECK(eq_up_to_unit(delta_from_seifert(V_TREFOIL, Q), Poly::from_longs(Q, {1, -1, 1})));
    CHECK(eq_up_to_unit(delta_from_seifert(V_FIG8, Q), Poly::from_longs(Q, {1, -3, 1})));
    CHECK(delta_from_seifert(SeifertMatrix{{}}, Q).deg() == 0);
}

TEST_CASE("invalid Seifert matrices are rejected") {
    SeifertMatrix ragged{{{1, 2}, {3}}};
    SeifertMatrix odd{{{1}}};
    SeifertMatrix singular{{{1, 0}, {0, 1}}};   // V - V^T = 0
    SeifertMatrix nonunit{{{0, 2}, {0, 0}}};    // det(V - V^T) = 4
    CHECK_THROWS_AS(ragged.validate(), SeifertError);
    CHECK_THROWS_AS(odd.validate(), SeifertError);
    CHECK_THROWS_AS(singular.validate(), SeifertError);
    CHECK_THROWS_AS(nonunit.validate(), SeifertError);
}

TEST_CASE("classical signatures") {
    CHECK(classical_signature(V_TREFOIL) == -2);
    CHECK(classical_signature(V_FIG8) == 0);
}

TEST_CASE("evaluation at t = -1 agrees with the symmetrized matrix") {
    // tV - V' at t = -1 is -(V + V'), so both signatures must coincide
    for (const auto* V : {&V_TREFOIL, &V_FIG8}) {
        auto M = V->t_matrix(Q);
        int n = V->size();
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n)), b(n, std::vector<Rat>(n));
        FE m1(Q, -1L);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i][j] = M.at(i, j).p.eval(m1).rational_part();
                b[i][j] = Rat(-(V->v[i][j] + V->v[j][i]));
            }
        CHECK(rational_signature(a) == rational_signature(b));
    }
}

TEST_CASE("diagram form matches the Seifert form up to an isometry") {
    auto ct = crosscheck(torus_diagram(2, 3), V_TREFOIL);
    CHECK(ct.pass);
    CHECK(ct.witness.str() == "-1");
    auto cf = crosscheck(parse_pd(PD_FIG8), V_FIG8);
    CHECK(cf.pass);
    // t - 2 and 1 - t agree modulo t^2 - 3t + 1: both square to -1 under bar
    CHECK(cf.witness.str() == "t - 2");
    QuotElem w = cf.witness;
    QuotElem other(w.R, parse_laurent("1 - t", Q));
    CHECK(w * w.bar() == other * other.bar());
}

TEST_CASE("mismatched pair is reported with a reason") {
    auto cm = crosscheck(torus_diagram(2, 3), V_FIG8);
    CHECK(!cm.pass);
    CHECK(cm.diagnostics.find("order mismatch") == 0);
}

TEST_CASE("the two presentations agree on the fixtures up to isometry") {
    for (const auto* V : {&V_TREFOIL, &V_FIG8}) {
        auto Gc = seifert_gram_cohomology(*V, Q);
        auto Gh = seifert_gram_homology(*V, Q);
        // both are hermitian after linking normalization
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CHECK(Gc.Q.at(j, i) == Gc.Q.at(i, j).bar());
                CHECK(Gh.Q.at(j, i) == Gh.Q.at(i, j).bar());
            }
    }
}
