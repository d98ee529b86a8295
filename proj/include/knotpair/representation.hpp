#ifndef KNOTPAIR_REPRESENTATION_HPP
#define KNOTPAIR_REPRESENTATION_HPP

#include <map>

#include "diagram.hpp"
#include "laurent.hpp"
#include "matrix.hpp"

namespace kp {

struct RepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using LMat = Matrix<Laurent>;

inline LMat lmat_zero(Field F, int n, int m) { return LMat(n, m, Laurent(F)); }
inline LMat lmat_identity(Field F, int n) {
    return LMat::identity(n, Laurent(F), Laurent::constant(F, FE(F, 1L)));
}

namespace detail {
inline Laurent lmat_det(const LMat& A) {
    int n = A.n;
    if (n == 1) return A.at(0, 0);
    Laurent acc(A.e[0].field());
    for (int j = 0; j < n; ++j) {
        if (A.at(0, j).is_zero()) continue;
        std::vector<int> rows, cols;
        for (int r = 1; r < n; ++r) rows.push_back(r);
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Laurent m = A.at(0, j) * lmat_det(A.submatrix(rows, cols));
        acc = (j % 2 == 0) ? acc + m : acc - m;
    }
    return acc;
}
} // namespace detail

// Inverse of a Laurent-entry matrix whose determinant is a unit a * t^k
// (true for all the representation matrices used here).
inline LMat lmat_inverse(const LMat& A) {
    if (A.n != A.m) throw RepError("inverse of non-square matrix");
    Field F = A.e[0].field();
    Laurent d = detail::lmat_det(A);
    if (d.is_zero() || d.p.deg() != 0)
        throw RepError("matrix determinant is not a unit of F[t,t^-1]");
    Laurent dinv = Laurent::tpow(F, -d.minexp, d.p.coeff(0).inv());
    int n = A.n;
    LMat R = lmat_zero(F, n, n);
    if (n == 1) {
        R.at(0, 0) = dinv;
        return R;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            Laurent cof = detail::lmat_det(A.submatrix(rows, cols));
            R.at(i, j) = ((i + j) % 2 == 0) ? dinv * cof : -(dinv * cof);
        }
    return R;
}

// Arc representation: an invertible matrix over F[t,t^-1] per arc, satisfying
// the conjugation relation M_gamma = M_beta^-1 M_alpha M_beta at every
// crossing. Colorings live in column vectors; the arc's meridian acts by
// x -> M x.
struct ArcRep {
    Field F;
    int dim = 1;
    std::vector<LMat> M, Minv; // indexed by arc

    // On column vectors the over-arc conjugates from the left: the relation
    // behind C(gamma) = M_beta (C(alpha) - C(beta)) + C(beta) is
    // M_gamma = M_beta M_alpha M_beta^-1 (the transpose of the row-vector
    // reading gamma = beta^-1 alpha beta).
    void check_wirtinger(const KnotDiagram& D) const {
        for (const auto& c : D.crossings) {
            LMat lhs = M[c.beta] * M[c.alpha] * Minv[c.beta];
            if (!(lhs.e == M[c.gamma].e))
                throw RepError("conjugation relation fails at crossing over arc '" +
                               D.arcs[c.beta] + "'");
        }
    }
};

// every arc acts by multiplication by t
inline ArcRep abelianization_rep(const KnotDiagram& D, Field F) {
    ArcRep f;
    f.F = F;
    f.dim = 1;
    LMat m = lmat_zero(F, 1, 1), mi = lmat_zero(F, 1, 1);
    m.at(0, 0) = Laurent::tpow(F, 1, FE(F, 1L));
    mi.at(0, 0) = Laurent::tpow(F, -1, FE(F, 1L));
    f.M.assign(D.narcs(), m);
    f.Minv.assign(D.narcs(), mi);
    return f;
}

// Spread seed matrices across the whole diagram via the conjugation relation;
// fails if some arc stays unreached or a relation is violated.
inline ArcRep propagate_rep(const KnotDiagram& D, Field F,
                            const std::map<std::string, LMat>& seeds) {
    ArcRep f;
    f.F = F;
    if (seeds.empty()) throw RepError("no seed matrices");
    f.dim = seeds.begin()->second.n;
    int n = D.narcs();
    std::vector<bool> have(n, false);
    f.M.assign(n, lmat_zero(F, f.dim, f.dim));
    f.Minv.assign(n, lmat_zero(F, f.dim, f.dim));
    std::map<std::string, int> byname;
    for (int a = 0; a < n; ++a) byname[D.arcs[a]] = a;
    for (const auto& [name, mat] : seeds) {
        auto it = byname.find(name);
        if (it == byname.end()) throw RepError("seed names unknown arc '" + name + "'");
        if (mat.n != f.dim || mat.m != f.dim) throw RepError("seed matrices differ in size");
        f.M[it->second] = mat;
        f.Minv[it->second] = lmat_inverse(mat);
        have[it->second] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : D.crossings) {
            if (!have[c.beta]) continue;
            if (have[c.alpha] && !have[c.gamma]) {
                f.M[c.gamma] = f.M[c.beta] * f.M[c.alpha] * f.Minv[c.beta];
                f.Minv[c.gamma] = f.M[c.beta] * f.Minv[c.alpha] * f.Minv[c.beta];
                have[c.gamma] = true;
                changed = true;
            } else if (have[c.gamma] && !have[c.alpha]) {
                f.M[c.alpha] = f.Minv[c.beta] * f.M[c.gamma] * f.M[c.beta];
                f.Minv[c.alpha] = f.Minv[c.beta] * f.Minv[c.gamma] * f.M[c.beta];
                have[c.alpha] = true;
                changed = true;
            }
        }
    }
    for (int a = 0; a < n; ++a)
        if (!have[a]) throw RepError("propagation does not reach arc '" + D.arcs[a] + "'");
    f.check_wirtinger(D);
    return f;
}

// ---- block-shift character representations (cyclic branched cover style) ----
//
// For exponents (e1,...,eq) the matrix sends basis vector i to z^{e_i} times
// the next one, with a t on the wrap-around:
//   q=3: [[0, z^{e1}, 0], [0, 0, z^{e2}], [t z^{e3}, 0, 0]].
inline LMat block_shift_matrix(Field F, const std::vector<int>& exps) {
    int q = (int)exps.size();
    int d = F->cyclotomic_order;
    if (d <= 0) throw RepError("block-shift matrix needs a cyclotomic field");
    LMat m = lmat_zero(F, q, q);
    auto zpow = [&](int e) {
        FE x(F, 1L), zgen(F);
        if (F->degree() == 1) return x;
        zgen.c[1] = 1;
        for (int k = 0; k < ((e % d) + d) % d; ++k) x = x * zgen;
        return x;
    };
    for (int i = 0; i + 1 < q; ++i) m.at(i, i + 1) = Laurent::constant(F, zpow(exps[i]));
    m.at(q - 1, 0) = Laurent::tpow(F, 1, zpow(exps[q - 1]));
    return m;
}

inline ArcRep induced_rep(const KnotDiagram& D, Field F, const std::map<std::string, LMat>& seeds) {
    ArcRep f = propagate_rep(D, F, seeds);
    // determinant must stay of the form (root of unity) * (+-t)
    for (const auto& m : f.M) {
        Laurent d = detail::lmat_det(m);
        if (d.is_zero() || d.p.deg() != 0)
            throw RepError("arc matrix determinant is not a unit");
    }
    return f;
}

// ---- SL2 and its adjoint on trace-zero matrices ----

using FMat = Matrix<FE>; // constant matrices over the field

// column matrix of x -> A^-1 x A on the basis h=[[1,0],[0,-1]], e=[[0,1],[0,0]],
// f=[[0,0],[1,0]]
inline FMat adjoint_matrix(const FMat& A) {
    Field F = A.e[0].F;
    FE det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
    if (!(det == FE(F, 1L))) throw RepError("adjoint of a non-SL2 matrix");
    FMat Ai(2, 2, FE(F));
    Ai.at(0, 0) = A.at(1, 1);
    Ai.at(1, 1) = A.at(0, 0);
    Ai.at(0, 1) = -A.at(0, 1);
    Ai.at(1, 0) = -A.at(1, 0);
    auto basis = [&](int k) {
        FMat X(2, 2, FE(F));
        if (k == 0) {
            X.at(0, 0) = FE(F, 1L);
            X.at(1, 1) = FE(F, -1L);
        } else if (k == 1)
            X.at(0, 1) = FE(F, 1L);
        else
            X.at(1, 0) = FE(F, 1L);
        return X;
    };
    FMat R(3, 3, FE(F));
    for (int j = 0; j < 3; ++j) {
        FMat Y = Ai * basis(j) * A;
        R.at(0, j) = Y.at(0, 0);
        R.at(1, j) = Y.at(0, 1);
        R.at(2, j) = Y.at(1, 0);
    }
    return R;
}

// Elliptic SL2 family on the figure-eight diagram: seeds [[s,1],[0,1/s]] and
// [[s,0],[u+1,1/s]] on the named arcs, subject to s^2 + s^-2 + u + u^-1 = 1
// and the genericity product; the module matrices are t times the adjoint
// action.
inline ArcRep elliptic_adjoint_rep(const KnotDiagram& D, Field F, const FE& s, const FE& u,
                                   const std::string& arc1, const std::string& arc2) {
    if (s.is_zero() || u.is_zero()) throw RepError("s and u must be nonzero");
    if (!(s.conj() == s)) throw RepError("s is not fixed by the involution");
    if (!(u.conj() == u)) throw RepError("u is not fixed by the involution");
    FE one(F, 1L), si = s.inv(), ui = u.inv();
    if (!((s * s + si * si + u + ui - one).is_zero()))
        throw RepError("parameters violate s^2 + s^-2 + u + u^-1 - 1 = 0");
    FE two(F, 2L);
    FE gen = (u - one) * (u + ui - one) * (two * u + two * ui - one) *
             (two * u + two * ui - FE(F, 5L)) * (u * u * u - u * u - two * u - one);
    if (gen.is_zero()) throw RepError("genericity product vanishes");
    FMat A1(2, 2, FE(F)), A2(2, 2, FE(F));
    A1.at(0, 0) = s;
    A1.at(0, 1) = one;
    A1.at(1, 1) = si;
    A2.at(0, 0) = s;
    A2.at(1, 0) = u + one;
    A2.at(1, 1) = si;
    // propagate at the SL2 level, then pass to t * adjoint
    std::map<std::string, int> byname;
    for (int a = 0; a < D.narcs(); ++a) byname[D.arcs[a]] = a;
    if (!byname.count(arc1) || !byname.count(arc2)) throw RepError("seed arc name unknown");
    int n = D.narcs();
    std::vector<FMat> A(n, FMat(2, 2, FE(F)));
    std::vector<bool> have(n, false);
    A[byname[arc1]] = A1;
    A[byname[arc2]] = A2;
    have[byname[arc1]] = have[byname[arc2]] = true;
    auto sl2_inv = [&](const FMat& X) {
        FMat Y(2, 2, FE(F));
        Y.at(0, 0) = X.at(1, 1);
        Y.at(1, 1) = X.at(0, 0);
        Y.at(0, 1) = -X.at(0, 1);
        Y.at(1, 0) = -X.at(1, 0);
        return Y;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : D.crossings) {
            if (!have[c.beta]) continue;
            if (have[c.alpha] && !have[c.gamma]) {
                A[c.gamma] = sl2_inv(A[c.beta]) * A[c.alpha] * A[c.beta];
                have[c.gamma] = true;
                changed = true;
            } else if (have[c.gamma] && !have[c.alpha]) {
                A[c.alpha] = A[c.beta] * A[c.gamma] * sl2_inv(A[c.beta]);
                have[c.alpha] = true;
                changed = true;
            }
        }
    }
    for (int a = 0; a < n; ++a)
        if (!have[a]) throw RepError("SL2 propagation does not reach arc '" + D.arcs[a] + "'");
    for (const auto& c : D.crossings) {
        FMat lhs = sl2_inv(A[c.beta]) * A[c.alpha] * A[c.beta];
        if (!(lhs.e == A[c.gamma].e)) throw RepError("SL2 conjugation relation fails");
    }
    ArcRep f;
    f.F = F;
    f.dim = 3;
    for (int a = 0; a < n; ++a) {
        // module matrix = t * (matrix of x -> A^-1 x A); these compose
        // contravariantly, which is exactly the left-conjugation relation the
        // stored matrices satisfy
        FMat ad = adjoint_matrix(A[a]);
        LMat m = lmat_zero(F, 3, 3), mi = lmat_zero(F, 3, 3);
        FMat adi = adjoint_matrix(sl2_inv(A[a]));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (!ad.at(i, j).is_zero()) m.at(i, j) = Laurent::tpow(F, 1, ad.at(i, j));
                if (!adi.at(i, j).is_zero()) mi.at(i, j) = Laurent::tpow(F, -1, adi.at(i, j));
            }
        f.M.push_back(std::move(m));
        f.Minv.push_back(std::move(mi));
    }
    f.check_wirtinger(D);
    return f;
}

} // namespace kp

#endif
