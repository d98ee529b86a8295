#ifndef KNOTPAIR_SEIFERT_HPP
#define KNOTPAIR_SEIFERT_HPP

#include "pairing.hpp"
#include "talex.hpp"

namespace kp {

struct SeifertError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// integer Seifert matrix; V - V^T must be unimodular (in fact symplectic)
struct SeifertMatrix {
    std::vector<std::vector<long>> v;

    int size() const { return (int)v.size(); }

    void validate() const {
        int n = size();
        for (const auto& row : v)
            if ((int)row.size() != n) throw SeifertError("Seifert matrix is not square");
        if (n % 2 != 0) throw SeifertError("Seifert matrix must have even size");
        if (n == 0) return;
        // det(V - V^T) must be +-1
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = Rat(v[i][j] - v[j][i]);
        Rat det(1);
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (a[r][c] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) throw SeifertError("V - V^T is singular");
            if (p != c) {
                std::swap(a[p], a[c]);
                det = -det;
            }
            det *= a[c][c];
            for (int r = c + 1; r < n; ++r) {
                if (a[r][c] == 0) continue;
                Rat f = a[r][c] / a[c][c];
                for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            }
        }
        if (det != 1 && det != -1) throw SeifertError("det(V - V^T) is not a unit");
    }

    // tV - V' over F[t,t^-1]
    Matrix<Laurent> t_matrix(Field F) const {
        int n = size();
        Matrix<Laurent> M(n, n, Laurent(F));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Laurent e(F);
                if (v[i][j] != 0) e += Laurent::tpow(F, 1, FE(F, v[i][j]));
                if (v[j][i] != 0) e -= Laurent::constant(F, FE(F, v[j][i]));
                M.at(i, j) = e;
            }
        return M;
    }
};

inline Poly delta_from_seifert(const SeifertMatrix& V, Field F) {
    V.validate();
    if (V.size() == 0) return Poly::from_longs(F, {1});
    return unit_normalize(detail::lmat_det(V.t_matrix(F)));
}

// cohomology-side presentation of the linking form: (1 - t^-1)(tV - V')
inline GramForm seifert_gram_cohomology(const SeifertMatrix& V, Field F) {
    Poly delta = delta_from_seifert(V, F);
    GramForm G;
    G.R = QuotRing::make(delta);
    int n = V.size();
    G.Q = Matrix<QuotElem>(n, n, QuotElem(G.R));
    Laurent u = Laurent::constant(F, FE(F, 1L)) - Laurent::tpow(F, -1, FE(F, 1L));
    Matrix<Laurent> M = V.t_matrix(F);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.Q.at(i, j) = QuotElem(G.R, u * M.at(i, j));
    return G;
}

// homology-side presentation: (1 - t) adj(t^-1 V - V'), the numerators of the
// pairing with values in F(t)/F[t,t^-1] (denominator Delta implied)
inline GramForm seifert_gram_homology(const SeifertMatrix& V, Field F) {
    Poly delta = delta_from_seifert(V, F);
    GramForm G;
    G.R = QuotRing::make(delta);
    int n = V.size();
    G.Q = Matrix<QuotElem>(n, n, QuotElem(G.R));
    Matrix<Laurent> M(n, n, Laurent(F));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Laurent e(F);
            if (V.v[i][j] != 0) e += Laurent::tpow(F, -1, FE(F, V.v[i][j]));
            if (V.v[j][i] != 0) e -= Laurent::constant(F, FE(F, V.v[j][i]));
            M.at(i, j) = e;
        }
    Laurent u = Laurent::constant(F, FE(F, 1L)) - Laurent::tpow(F, 1, FE(F, 1L));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // cofactor C_ji
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            Laurent cof = n == 1 ? Laurent::constant(F, FE(F, 1L))
                                 : detail::lmat_det(M.submatrix(rows, cols));
            if ((i + j) % 2 != 0) cof = -cof;
            G.Q.at(i, j) = QuotElem(G.R, u * cof);
        }
    return G;
}

// signature of a rational symmetric matrix by symmetric (congruence) reduction
inline int rational_signature(std::vector<std::vector<Rat>> a) {
    int n = (int)a.size(), sig = 0;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue; // zero row/column: rank drop
            // add row/col p into k to create a nonzero diagonal entry
            for (int j = 0; j < n; ++j) a[k][j] += a[p][j];
            for (int i = 0; i < n; ++i) a[i][k] += a[i][p];
        }
        sig += a[k][k] > 0 ? 1 : -1;
        for (int r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rat f = a[r][k] / a[k][k];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[k][j];
            for (int i = 0; i < n; ++i) a[i][r] -= f * a[k][i];
        }
    }
    return sig;
}

inline int classical_signature(const SeifertMatrix& V) {
    int n = V.size();
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = Rat(V.v[i][j] + V.v[j][i]);
    return rational_signature(std::move(s));
}

struct CrosscheckResult {
    bool pass = false;
    std::string diagnostics;
    QuotElem witness; // u with diagram value = u * bar(u) * seifert value
};

// Compare the diagram-side linking form against the Seifert-side presentation
// on cyclic modules: after matching Delta, solve for a unit u with
// Bl_D(g,g) = u bar(u) Bl_V(e,e) by small-coefficient search.
inline CrosscheckResult crosscheck(const KnotDiagram& D, const SeifertMatrix& V) {
    Field F = NumberField::rationals();
    CrosscheckResult res;
    auto ta = twisted_alexander(D, abelianization_rep(D, F));
    Poly dV = delta_from_seifert(V, F);
    if (!eq_up_to_unit(ta.display, dV)) {
        res.diagnostics = "order mismatch: diagram " + Laurent(ta.display, 0).str() +
                          " vs Seifert " + Laurent(dV, 0).str();
        return res;
    }
    auto f = abelianization_rep(D, F);
    auto col = solve_colorings(D, f, Laurent(dV, 0));
    if (col.rank() != V.size() / 2) {
        res.diagnostics = "rank mismatch: diagram " + std::to_string(col.rank()) +
                          " vs genus " + std::to_string(V.size() / 2);
        return res;
    }
    auto g = col.normalized_generator(1);
    QuotElem blD = blanchfield_value(gram(D, f, PsiForm::sesquilinear(), col, {g}).Q.at(0, 0));
    GramForm H = seifert_gram_homology(V, F);
    // generator of the cyclic module: first basis vector with nonzero self-pairing
    QuotElem blV(H.R);
    for (int i = 0; i < V.size(); ++i)
        if (!H.Q.at(i, i).is_zero()) {
            blV = H.Q.at(i, i);
            break;
        }
    if (blV.is_zero()) {
        res.diagnostics = "degenerate Seifert-side pairing";
        return res;
    }
    QuotElem ratio = blD * blV.inv();
    // search u = sum c_k t^k with small integer coefficients
    int deg = H.R->deg();
    std::vector<long> c(deg, 0);
    const long B = 3;
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == deg) {
            Poly p(F);
            for (int i = 0; i < deg; ++i) p.a.push_back(FE(F, c[i]));
            p.trim();
            if (p.is_zero()) return false;
            QuotElem u(H.R, p);
            return u * u.bar() == ratio;
        }
        for (long v = -B; v <= B; ++v) {
            c[k] = v;
            if (rec(k + 1)) return true;
        }
        c[k] = 0;
        return false;
    };
    if (rec(0)) {
        Poly p(F);
        for (int i = 0; i < deg; ++i) p.a.push_back(FE(F, c[i]));
        p.trim();
        res.pass = true;
        res.witness = QuotElem(H.R, p);
        res.diagnostics = "isometry witness u = " + res.witness.str();
    } else {
        res.diagnostics = "no unit u with u*bar(u) = " + ratio.str() + " in the search box";
    }
    return res;
}

} // namespace kp

#endif
