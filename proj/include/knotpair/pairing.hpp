#ifndef KNOTPAIR_PAIRING_HPP
#define KNOTPAIR_PAIRING_HPP

#include "coloring.hpp"

namespace kp {

// The three coefficient forms fed to the crossing sum. Conventions follow the
// source material literally, so the bar sits on the first argument for the
// sesquilinear and Killing kinds and on the second for the hermitian kind;
// the hermitian values carry a formal external sqrt(-1) factor that is only
// applied at numeric evaluation (the coefficient fields contain no i).
enum class PsiKind { Sesquilinear, Killing, HermitianI };

struct PsiForm {
    PsiKind kind = PsiKind::Sesquilinear;
    int dim = 1;

    static PsiForm sesquilinear() { return {PsiKind::Sesquilinear, 1}; }
    static PsiForm killing() { return {PsiKind::Killing, 3}; }
    static PsiForm hermitian_i() { return {PsiKind::HermitianI, 3}; }

    bool formal_i() const { return kind == PsiKind::HermitianI; }

    QuotElem apply(Ring R, const std::vector<QuotElem>& x, const std::vector<QuotElem>& y) const {
        switch (kind) {
        case PsiKind::Sesquilinear:
            return x[0].bar() * y[0];
        case PsiKind::Killing: {
            // trace form on sl2 in the basis h,e,f: 2 h*h, e*f + f*e
            FE two(R->field(), 2L);
            return two * (x[0].bar() * y[0]) + x[1].bar() * y[2] + x[2].bar() * y[1];
        }
        case PsiKind::HermitianI: {
            QuotElem acc(R);
            for (int j = 0; j < 3; ++j) acc += x[j] * y[j].bar();
            return acc;
        }
        }
        throw std::logic_error("unreachable");
    }
};

// signed per-crossing contribution: eps * psi(C(alpha)-C(beta), y - M_beta^-1 y)
// with y = C'(beta)
inline QuotElem crossing_weight(const KnotDiagram& D, const ArcRep& f, const Crossing& c,
                                const PsiForm& psi, Ring R, const std::vector<QuotElem>& C,
                                const std::vector<QuotElem>& Cp) {
    int d = f.dim;
    std::vector<QuotElem> d1, d2;
    d1.reserve(d);
    d2.reserve(d);
    for (int i = 0; i < d; ++i) d1.push_back(C[d * c.alpha + i] - C[d * c.beta + i]);
    for (int i = 0; i < d; ++i) {
        QuotElem acc = Cp[d * c.beta + i];
        for (int j = 0; j < d; ++j)
            acc -= QuotElem(R, f.Minv[c.beta].at(i, j)) * Cp[d * c.beta + j];
        d2.push_back(acc);
    }
    QuotElem w = psi.apply(R, d1, d2);
    if (c.sign < 0) w = -w;
    return w;
}

struct GramForm {
    Ring R;
    bool times_i = false; // value = matrix entry * sqrt(-1)
    Matrix<QuotElem> Q{0, 0, QuotElem()};

    std::complex<double> eval_entry(int i, int j, std::complex<double> z) const {
        std::complex<double> v = Q.at(i, j).eval_c(z);
        return times_i ? v * std::complex<double>(0.0, 1.0) : v;
    }
};

// crossing-sum pairing on a list of colorings
inline GramForm gram(const KnotDiagram& D, const ArcRep& f, const PsiForm& psi,
                     const ColoringModule& col,
                     const std::vector<std::vector<QuotElem>>& vectors) {
    GramForm G;
    G.R = col.R;
    G.times_i = psi.formal_i();
    int n = (int)vectors.size();
    G.Q = Matrix<QuotElem>(n, n, QuotElem(col.R));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QuotElem acc(col.R);
            for (const auto& c : D.crossings)
                acc += crossing_weight(D, f, c, psi, col.R, vectors[i], vectors[j]);
            G.Q.at(i, j) = acc;
        }
    return G;
}

inline GramForm gram(const KnotDiagram& D, const ArcRep& f, const PsiForm& psi,
                     const ColoringModule& col) {
    return gram(D, f, psi, col, col.basis);
}

// linking-form normalization: divide the crossing sum by t^-1 - t
inline QuotElem blanchfield_value(const QuotElem& q) {
    Ring R = q.R;
    Laurent tm = Laurent::tpow(R->field(), -1, FE(R->field(), 1L)) -
                 Laurent::tpow(R->field(), 1, FE(R->field(), 1L));
    return q * QuotElem(R, tm).inv();
}

inline GramForm blanchfield(const GramForm& G) {
    GramForm B = G;
    for (auto& x : B.Q.e) x = blanchfield_value(x);
    return B;
}

// the involution induced on F[t,t^-1]/(Delta) by f(t) -> bar(f)(t) acting on
// x/Delta: x -> a^-1 t^N bar(x) where bar(Delta) = a t^-N Delta. This is the
// conjugation under which the trace functional changes sign.
inline QuotElem duality_bar(const QuotElem& x) {
    Ring R = x.R;
    const Poly& D = R->modulus;
    Laurent bD = Laurent(D, 0).bar();
    FE a = bD.p.lead(); // bar(D) = a * t^-N * D for reciprocal D
    if (!eq_up_to_unit(bD.p, D))
        throw std::domain_error("modulus is not reciprocal up to a unit");
    int N = D.deg();
    QuotElem r = x.bar();
    QuotElem tN(R, Laurent::tpow(R->field(), N, a.inv()));
    return tN * r;
}

} // namespace kp

#endif
