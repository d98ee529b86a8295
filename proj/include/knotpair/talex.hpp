#ifndef KNOTPAIR_TALEX_HPP
#define KNOTPAIR_TALEX_HPP

#include "coloring.hpp"

namespace kp {

// Lagrange interpolation through (x_k, y_k), distinct rational nodes.
inline Poly interpolate(Field F, const std::vector<Rat>& xs, const std::vector<FE>& ys) {
    Poly acc(F);
    int n = (int)xs.size();
    for (int k = 0; k < n; ++k) {
        Poly term = Poly::constant(F, ys[k]);
        Rat denom(1);
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            // term *= (t - x_j)
            Poly lin(F);
            lin.a = {FE(F, -xs[j]), FE(F, 1L)};
            term = term * lin;
            denom *= xs[k] - xs[j];
        }
        acc = acc + FE(F, Rat(1) / denom) * term;
    }
    return acc;
}

// determinant of a square Laurent matrix by evaluation at rational points and
// interpolation; per-row t-power units are cleared first (the result is only
// meaningful up to such units anyway, which is how it is used)
inline Poly laurent_det_interp(const Matrix<Laurent>& S) {
    Field F = S.e[0].field();
    int n = S.n;
    if (n == 0) return Poly::from_longs(F, {1});
    // clear per-row units, collect degree bound
    std::vector<std::vector<Poly>> A(n, std::vector<Poly>(n, Poly(F)));
    int bound = 0;
    for (int i = 0; i < n; ++i) {
        int mrow = 0, dmax = 0;
        for (int j = 0; j < n; ++j)
            if (!S.at(i, j).is_zero()) mrow = std::min(mrow, S.at(i, j).lo());
        for (int j = 0; j < n; ++j) {
            const Laurent& l = S.at(i, j);
            if (l.is_zero()) continue;
            A[i][j] = Poly::tpow(F, l.minexp - mrow, FE(F, 1L)) * l.p;
            dmax = std::max(dmax, A[i][j].deg());
        }
        bound += dmax;
    }
    std::vector<Rat> xs;
    std::vector<FE> ys;
    for (int k = 0; k <= bound; ++k) {
        Rat x(2 * k + 3, 2); // 3/2, 5/2, ... distinct, nonzero
        Matrix<FE> E(n, n, FE(F));
        FE xv(F, x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!A[i][j].is_zero()) E.at(i, j) = A[i][j].eval(xv);
        xs.push_back(x);
        ys.push_back(E.det());
    }
    return interpolate(F, xs, ys);
}

struct TwistedAlexander {
    Poly minor;    // one crossing row block and the base arc column block deleted
    Poly denom;    // det(I - M_base)
    Poly display;  // minor with every factor shared with denom stripped, unit-normalized
};

// Twisted Alexander polynomial from the coloring equations: delete the base
// arc's column block and a crossing's row block, take the gcd of these maximal
// minors over the dropped row block, strip all factors shared with
// det(I - M_base) to saturation, and unit-normalize. drop_row = -1 runs over
// every row block; a fixed row is cheaper and agrees on all shipped examples.
inline TwistedAlexander twisted_alexander(const KnotDiagram& D, const ArcRep& f, int base_arc = 0,
                                          int drop_row = 0) {
    Matrix<Laurent> S = coloring_system(D, f);
    int d = f.dim, n = D.narcs();
    std::vector<int> cols;
    for (int a = 0; a < n; ++a)
        if (a != base_arc)
            for (int i = 0; i < d; ++i) cols.push_back(d * a + i);
    TwistedAlexander out;
    Poly acc(f.F);
    for (int dr = 0; dr < (int)D.crossings.size(); ++dr) {
        if (drop_row >= 0 && dr != drop_row) continue;
        std::vector<int> rows;
        for (int r = 0; r < (int)D.crossings.size(); ++r)
            if (r != dr)
                for (int i = 0; i < d; ++i) rows.push_back(d * r + i);
        Poly m = laurent_det_interp(S.submatrix(rows, cols));
        acc = acc.is_zero() ? m : poly_gcd(acc, m);
    }
    out.minor = acc;
    if (out.minor.is_zero())
        throw std::domain_error("twisted Alexander polynomial vanishes: the order assumption fails");
    LMat IM = lmat_identity(f.F, d) - f.M[base_arc];
    out.denom = detail::lmat_det(IM).p;
    Poly h = out.minor;
    if (!h.is_zero() && out.denom.deg() > 0)
        while (true) {
            Poly g = poly_gcd(h, out.denom);
            if (g.deg() == 0) break;
            h = h / g;
        }
    out.display = unit_normalize(Laurent(h, 0)); // also sheds any t^k factor
    return out;
}

} // namespace kp

#endif
