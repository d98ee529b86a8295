#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpair/builtin.hpp"
#include "knotpair/cocycle.hpp"

using namespace kp;

TEST_CASE("cocycle condition over the Alexander quandle") {
    AlexanderQuandle X{7, 3};
    CHECK(is_cocycle(X, mochizuki_cocycle(X, 1)));
    CHECK(is_cocycle(X, mochizuki_cocycle(X, 4)));
    CHECK(!is_cocycle(X, [&](long x, long) { return X.mod(x * x); }));
    AlexanderQuandle X52{5, 2};
    CHECK(!is_cocycle(X52, [&](long x, long) { return X52.mod(x * x); }));
    // the pairing-derived weight is a pointwise cocycle only when t = -1
    CHECK(!is_cocycle(X, phi_from_psi(X)));
    AlexanderQuandle Xm1{7, 6};
    CHECK(is_cocycle(Xm1, phi_from_psi(Xm1)));
}

TEST_CASE("state sums agree between the two trefoil diagrams") {
    AlexanderQuandle X{7, 3};
    KnotDiagram A = torus_diagram(2, 3);
    KnotDiagram B = parse_pd(PD_TREFOIL);
    auto m1 = cocycle_invariant(A, X, phi_from_psi(X));
    auto m2 = cocycle_invariant(B, X, phi_from_psi(X));
    CHECK(m1 == m2);
    std::map<long, long> want{{0, 49}};
    CHECK(m1 == want);
    CHECK(cocycle_invariant(A, X, mochizuki_cocycle(X, 1)) == want);
}

TEST_CASE("one-crossing kink carries only the diagonal colorings") {
    AlexanderQuandle X{7, 3};
    KnotDiagram D = parse_pd("PD[X(1,2,2,1)]");
    auto m = cocycle_invariant(D, X, mochizuki_cocycle(X, 1));
    std::map<long, long> want{{0, 7}};
    CHECK(m == want);
}

TEST_CASE("state sum with the pairing weight equals the finite self-pairing") {
    AlexanderQuandle X{7, 3};
    KnotDiagram D = torus_diagram(2, 3);
    auto phi = phi_from_psi(X);
    int n = D.narcs();
    std::vector<long> col(n, 0);
    int seen = 0;
    while (true) {
        bool ok = true;
        for (const auto& cr : D.crossings)
            if (X.op(col[cr.alpha], col[cr.beta]) != col[cr.gamma]) {
                ok = false;
                break;
            }
        if (ok) {
            ++seen;
            CHECK(cocycle_value(D, X, phi, col) == finite_self_pairing(D, X, col));
        }
        int i = 0;
        while (i < n && ++col[i] == X.p) col[i++] = 0;
        if (i == n) break;
    }
    CHECK(seen == 49);
}

TEST_CASE("state sum values are translation invariant coloring by coloring") {
    AlexanderQuandle X{7, 3};
    KnotDiagram D = torus_diagram(2, 3);
    auto phi = mochizuki_cocycle(X, 2);
    int n = D.narcs();
    std::vector<long> col(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& cr : D.crossings)
            if (X.op(col[cr.alpha], col[cr.beta]) != col[cr.gamma]) {
                ok = false;
                break;
            }
        if (ok)
            for (long e = 1; e < X.p; ++e) {
                std::vector<long> shifted = col;
                for (auto& x : shifted) x = X.mod(x + e);
                CHECK(cocycle_value(D, X, phi, shifted) == cocycle_value(D, X, phi, col));
            }
        int i = 0;
        while (i < n && ++col[i] == X.p) col[i++] = 0;
        if (i == n) break;
    }
}

TEST_CASE("enumeration guard refuses oversized state sums") {
    AlexanderQuandle X{7, 3};
    KnotDiagram D = diagram_12a169();
    CHECK_THROWS_AS(cocycle_invariant(D, X, mochizuki_cocycle(X, 1)), std::domain_error);
}

TEST_CASE("band doubling weight equals the wedge form on both ends") {
    // exhaustive over (F_7^2)^4 at t = -1
    long bad1 = 0, bad2 = 0, n = 0;
    for (long a0 = 0; a0 < 7; ++a0)
        for (long a1 = 0; a1 < 7; ++a1)
            for (long b0 = 0; b0 < 7; ++b0)
                for (long b1 = 0; b1 < 7; ++b1)
                    for (long c0 = 0; c0 < 7; ++c0)
                        for (long c1 = 0; c1 < 7; ++c1)
                            for (long d0 = 0; d0 < 7; ++d0)
                                for (long d1 = 0; d1 < 7; ++d1) {
                                    auto r = double_delta_weight(7, -1, {a0, a1}, {b0, b1},
                                                                 {c0, c1}, {d0, d1});
                                    ++n;
                                    if (r.weight_sum != r.first_form) ++bad1;
                                    if (r.weight_sum != r.second_form) ++bad2;
                                }
    CHECK(n == 5764801);
    CHECK(bad1 == 0);
    CHECK(bad2 == 0);
    CHECK_THROWS_AS(double_delta_weight(7, 7, {0, 0}, {0, 0}, {0, 0}, {0, 0}),
                    std::domain_error);
}
