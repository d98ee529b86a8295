#ifndef KNOTPAIR_BUILTIN_HPP
#define KNOTPAIR_BUILTIN_HPP

#include "representation.hpp"

namespace kp {

// the standard planar code of the figure-eight knot
inline const char* PD_FIG8 = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";
// right-handed trefoil planar code (same diagram as torus_diagram(2,3))
inline const char* PD_TREFOIL = "PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]";

// 12a169: arcs b1..b12, role-normalized crossing triples
inline KnotDiagram diagram_12a169() {
    KnotDiagram D;
    D.name = "12a169";
    for (int i = 1; i <= 12; ++i) D.arcs.push_back("b" + std::to_string(i));
    const int T[12][4] = {{0, 10, 11, 1}, {11, 2, 10, 1}, {9, 11, 2, 1},  {3, 0, 1, -1},
                          {0, 1, 2, -1},  {1, 3, 4, -1},  {5, 4, 3, -1},  {4, 5, 6, -1},
                          {7, 6, 5, -1},  {6, 7, 8, -1},  {9, 8, 7, -1},  {8, 9, 10, -1}};
    for (const auto& r : T) D.crossings.push_back({r[0], r[1], r[2], r[3]});
    D.validate();
    return D;
}

inline std::vector<std::string> builtin_diagram_names() {
    return {"trefoil", "fig8", "torus:m,n", "12a169"};
}

inline KnotDiagram builtin_diagram(const std::string& name) {
    if (name == "trefoil") {
        KnotDiagram D = torus_diagram(2, 3);
        D.name = "trefoil";
        return D;
    }
    if (name == "fig8") {
        KnotDiagram D = parse_pd(PD_FIG8);
        D.name = "fig8";
        return D;
    }
    if (name == "12a169") return diagram_12a169();
    if (name.rfind("torus:", 0) == 0) {
        auto body = name.substr(6);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw DiagramError("torus builtin wants torus:m,n");
        int m = std::stoi(body.substr(0, comma));
        int n = std::stoi(body.substr(comma + 1));
        KnotDiagram D = torus_diagram(m, n);
        D.name = name;
        return D;
    }
    throw DiagramError("unknown builtin diagram '" + name + "'");
}

// order-5 character of 12a169: meridians act on F(zeta_5)[t,t^-1]^3 by
// coordinate shift with zeta exponents propagated from two seed labels
inline ArcRep rep_chi5(const KnotDiagram& D) {
    Field F = NumberField::cyclotomic(5);
    return induced_rep(D, F,
                       {{"b1", block_shift_matrix(F, {0, 0, 0})},
                        {"b2", block_shift_matrix(F, {3, 3, 4})}});
}

inline std::vector<std::string> builtin_rep_names() {
    return {"abelian", "chi5", "fig8-adjoint", "fig8-adjoint:s,u"};
}

// `fig8-adjoint` or `fig8-adjoint:s,u` with integer s and u one of an integer
// or z^k (z = zeta_3); defaults (1, z)
inline ArcRep builtin_rep(const std::string& name, const KnotDiagram& D) {
    if (name == "abelian") return abelianization_rep(D, NumberField::rationals());
    if (name == "chi5") return rep_chi5(D);
    if (name.rfind("fig8-adjoint", 0) == 0) {
        Field F = with_trivial_involution(NumberField::cyclotomic(3));
        FE s(F, 1L), u(F);
        u.c[1] = 1; // zeta_3
        if (name.size() > 12) {
            if (name[12] != ':') throw RepError("unknown builtin representation '" + name + "'");
            auto body = name.substr(13);
            auto comma = body.find(',');
            if (comma == std::string::npos)
                throw RepError("fig8-adjoint builtin wants fig8-adjoint:s,u");
            s = FE(F, (long)std::stol(body.substr(0, comma)));
            std::string us = body.substr(comma + 1);
            u = FE(F);
            if (us == "z")
                u.c[1] = 1;
            else if (us == "z^2" || us == "z2")
                u = FE(F, std::vector<Rat>{-1, -1}); // zeta^2 = -1 - zeta
            else
                u.c[0] = Rat(std::stol(us));
        }
        return elliptic_adjoint_rep(D, F, s, u, D.arcs.at(0), D.arcs.at(1));
    }
    throw RepError("unknown builtin representation '" + name + "'");
}

} // namespace kp

#endif
