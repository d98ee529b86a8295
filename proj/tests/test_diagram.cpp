#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "knotpair/builtin.hpp"

using namespace kp;

TEST_CASE("planar code parsing and round trip") {
    KnotDiagram D = parse_pd(PD_FIG8);
    CHECK(D.narcs() == 4);
    CHECK(D.crossings.size() == 4);
    CHECK(D.writhe() == 0);
    CHECK(same_diagram(D, parse_pd(print_pd(D))));
}

TEST_CASE("trefoil codes: right-handed matches the braid closure") {
    KnotDiagram R = parse_pd(PD_TREFOIL);
    CHECK(R.writhe() == 3);
    CHECK(same_diagram(R, torus_diagram(2, 3)));
    KnotDiagram L = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
    CHECK(L.writhe() == -3);
    CHECK(!same_diagram(L, R));
}

TEST_CASE("relation-format parsing matches the shipped 12a169 file") {
    std::ifstream f(std::string(DATA_DIR) + "/12a169.xrl");
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    KnotDiagram X = parse_xrl(ss.str());
    CHECK(X.narcs() == 12);
    CHECK(same_diagram(X, diagram_12a169()));
}

TEST_CASE("each arc leaves and enters exactly one crossing") {
    for (const char* name : {"trefoil", "fig8", "12a169"}) {
        KnotDiagram D = builtin_diagram(name);
        int n = D.narcs();
        std::vector<int> outs(n, 0), ins(n, 0);
        for (auto& c : D.crossings) {
            ++outs[D.under_out(c)];
            ++ins[D.under_in(c)];
        }
        for (int a = 0; a < n; ++a) {
            CHECK(outs[a] == 1);
            CHECK(ins[a] == 1);
        }
    }
}

TEST_CASE("torus family") {
    KnotDiagram D = torus_diagram(2, 5);
    CHECK(D.narcs() == 5);
    CHECK(D.writhe() == 5);
    CHECK(torus_diagram(3, 4).narcs() == 8);
    CHECK_THROWS_AS(torus_diagram(2, 4), DiagramError); // gcd 2
    CHECK_THROWS_AS(torus_diagram(1, 3), DiagramError);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), DiagramError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4),X(1,2,3,4)]"), DiagramError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), DiagramError);
    CHECK_THROWS_AS(parse_xrl("a < b : +"), DiagramError);
    CHECK_THROWS_AS(parse_xrl("a < b -> c : *"), DiagramError);
    // two crossings claiming the same under-out arc
    CHECK_THROWS_AS(parse_xrl("a < b -> c : +\nb < c -> c : +\nc < a -> b : +"), DiagramError);
}

TEST_CASE("comments and blank lines in relation files") {
    KnotDiagram D = parse_xrl("# trefoil\n"
                              "a1 < a2 -> a3 : +\n"
                              "\n"
                              "a3 < a1 -> a2 : +   # middle\n"
                              "a2 < a3 -> a1 : +\n");
    CHECK(D.narcs() == 3);
    CHECK(same_diagram(D, torus_diagram(2, 3)));
}

TEST_CASE("canonical codes separate knots") {
    CHECK(!same_diagram(torus_diagram(2, 3), parse_pd(PD_FIG8)));
    CHECK(!same_diagram(torus_diagram(2, 5), torus_diagram(2, 3)));
    CHECK(same_diagram(torus_diagram(2, 5), torus_diagram(2, 5)));
}
