#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpair/builtin.hpp"
#include "knotpair/talex.hpp"

using namespace kp;

static Field Q = NumberField::rationals();

static std::string display_of(const KnotDiagram& D, const ArcRep& f) {
    return Laurent(twisted_alexander(D, f).display, 0).str();
}

TEST_CASE("classical order polynomials of the stock knots") {
    KnotDiagram tre = torus_diagram(2, 3);
    CHECK(display_of(tre, abelianization_rep(tre, Q)) == "t^2 - t + 1");
    KnotDiagram f8 = parse_pd(PD_FIG8);
    CHECK(display_of(f8, abelianization_rep(f8, Q)) == "t^2 - 3*t + 1");
    KnotDiagram t34 = torus_diagram(3, 4);
    CHECK(display_of(t34, abelianization_rep(t34, Q)) == "t^6 - t^5 + t^3 - t + 1");
}

TEST_CASE("adjoint twisting of the figure eight: minor, denominator, display") {
    KnotDiagram D = parse_pd(PD_FIG8);
    ArcRep f = builtin_rep("fig8-adjoint", D);
    auto ta = twisted_alexander(D, f);
    Field F = f.F;
    Poly u = Poly::from_longs(F, {-1, 1}); // t - 1
    CHECK(eq_up_to_unit(ta.minor, u * u * u * u * Poly::from_longs(F, {1, -5, 1})));
    CHECK(eq_up_to_unit(ta.denom, u * u * u));
    CHECK(Laurent(ta.display, 0).str() == "t^2 - 5*t + 1");
}

TEST_CASE("order-5 character on 12a169") {
    KnotDiagram D = diagram_12a169();
    ArcRep f = rep_chi5(D);
    auto ta = twisted_alexander(D, f);
    CHECK(Laurent(ta.display, 0).str() == "4*t^2 + (z^3 + z^2 + 5)*t + 4");
    CHECK(Laurent(ta.denom, 0).str() == "-t + 1");
}

TEST_CASE("dropped row and base arc do not matter") {
    KnotDiagram D = diagram_12a169();
    ArcRep f = rep_chi5(D);
    Poly d0 = twisted_alexander(D, f).display;
    for (int dr : {1, 2, -1}) CHECK(twisted_alexander(D, f, 0, dr).display == d0);
    CHECK(twisted_alexander(D, f, 5, 3).display == d0);
    CHECK(twisted_alexander(D, f, 11, -1).display == d0);
}

TEST_CASE("reciprocality of every computed order polynomial") {
    KnotDiagram tre = torus_diagram(2, 3);
    CHECK(check_reciprocal(twisted_alexander(tre, abelianization_rep(tre, Q)).display));
    KnotDiagram f8 = parse_pd(PD_FIG8);
    CHECK(check_reciprocal(twisted_alexander(f8, abelianization_rep(f8, Q)).display));
    CHECK(check_reciprocal(twisted_alexander(f8, builtin_rep("fig8-adjoint", f8)).display));
    KnotDiagram t34 = torus_diagram(3, 4);
    CHECK(check_reciprocal(twisted_alexander(t34, abelianization_rep(t34, Q)).display));
    KnotDiagram D = diagram_12a169();
    auto ta = twisted_alexander(D, rep_chi5(D));
    auto unit = reciprocal_unit(Laurent(ta.display, 0));
    REQUIRE(unit.has_value());
    CHECK(unit->second == 2);
}

TEST_CASE("vanishing order is reported, not returned") {
    // constant character of order six on the trefoil: the classical order
    // polynomial has a root at a primitive sixth root of unity, so every
    // maximal minor degenerates
    KnotDiagram D = torus_diagram(2, 3);
    Field F6 = NumberField::cyclotomic(6);
    FE z(F6);
    z.c[1] = 1;
    ArcRep f;
    f.F = F6;
    f.dim = 1;
    LMat m(1, 1, Laurent(F6));
    m.at(0, 0) = Laurent::constant(F6, z);
    for (int a = 0; a < 3; ++a) {
        f.M.push_back(m);
        f.Minv.push_back(lmat_inverse(m));
    }
    CHECK_NOTHROW(f.check_wirtinger(D));
    CHECK_THROWS_WITH_AS(twisted_alexander(D, f, 0, -1),
                         "twisted Alexander polynomial vanishes: the order assumption fails",
                         std::domain_error);
}
