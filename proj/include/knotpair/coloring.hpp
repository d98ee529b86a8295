#ifndef KNOTPAIR_COLORING_HPP
#define KNOTPAIR_COLORING_HPP

#include "quot.hpp"
#include "representation.hpp"

namespace kp {

// The coloring equations, one block row per crossing:
//   -M_beta C(alpha) + (M_beta - I) C(beta) + C(gamma) = 0
// as a (d*#crossings) x (d*#arcs) matrix over F[t,t^-1].
inline Matrix<Laurent> coloring_system(const KnotDiagram& D, const ArcRep& f) {
    int d = f.dim, n = D.narcs();
    Matrix<Laurent> S((int)D.crossings.size() * d, n * d, Laurent(f.F));
    Laurent one = Laurent::constant(f.F, FE(f.F, 1L));
    for (int k = 0; k < (int)D.crossings.size(); ++k) {
        const Crossing& c = D.crossings[k];
        const LMat& Mb = f.M[c.beta];
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                S.at(d * k + i, d * c.alpha + j) -= Mb.at(i, j);
                S.at(d * k + i, d * c.beta + j) += Mb.at(i, j);
            }
            S.at(d * k + i, d * c.beta + i) -= one;
            S.at(d * k + i, d * c.gamma + i) += one;
        }
    }
    return S;
}

// Kernel of a Laurent matrix over F[t,t^-1]/(modulus), with extra rows pinning
// the listed coordinates to zero. Zero-divisor pivots split the modulus into
// coprime factors; the two kernels are recombined coordinate-wise.
inline std::vector<std::vector<Poly>> kernel_mod(const Matrix<Laurent>& S, const Poly& modulus,
                                                 const std::vector<int>& pin) {
    Ring R = QuotRing::make(modulus);
    int rows = S.n, cols = S.m;
    try {
        // working copy over the quotient ring, then plain Gauss-Jordan
        std::vector<std::vector<QuotElem>> W;
        W.reserve(rows + pin.size());
        for (int r = 0; r < rows; ++r) {
            std::vector<QuotElem> row;
            row.reserve(cols);
            for (int c = 0; c < cols; ++c) row.emplace_back(R, S.at(r, c));
            W.push_back(std::move(row));
        }
        for (int c : pin) {
            std::vector<QuotElem> row(cols, QuotElem(R));
            row[c] = QuotElem(R, 1L);
            W.push_back(std::move(row));
        }
        int nr = (int)W.size(), r0 = 0;
        std::vector<int> piv;
        for (int c = 0; c < cols && r0 < nr; ++c) {
            int pr = -1;
            for (int r = r0; r < nr; ++r)
                if (!W[r][c].is_zero()) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(W[r0], W[pr]);
            QuotElem ip = W[r0][c].inv();
            for (int cc = c; cc < cols; ++cc) W[r0][cc] *= ip;
            for (int r = 0; r < nr; ++r) {
                if (r == r0 || W[r][c].is_zero()) continue;
                QuotElem f0 = W[r][c];
                for (int cc = c; cc < cols; ++cc) W[r][cc] -= f0 * W[r0][cc];
            }
            piv.push_back(c);
            ++r0;
        }
        std::vector<std::vector<Poly>> basis;
        std::vector<bool> is_piv(cols, false);
        for (int c : piv) is_piv[c] = true;
        for (int fc = 0; fc < cols; ++fc) {
            if (is_piv[fc]) continue;
            std::vector<Poly> v(cols, Poly(S.e[0].field()));
            v[fc] = Poly::from_longs(S.e[0].field(), {1});
            for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (-W[r][fc]).v;
            basis.push_back(std::move(v));
        }
        return basis;
    } catch (const ZeroDivisorSplit& z) {
        auto [A, B] = coprime_split(modulus, z.factor);
        auto basA = kernel_mod(S, A, pin);
        auto basB = kernel_mod(S, B, pin);
        // CRT: x = xA * B * (B^-1 mod A) + xB * A * (A^-1 mod B)
        Field F = modulus.F;
        Ring RA = QuotRing::make(A), RB = QuotRing::make(B);
        Poly eA = (QuotElem(RA, B).inv().v * B) % modulus; // = 1 mod A, 0 mod B
        Poly eB = (QuotElem(RB, A).inv().v * A) % modulus;
        std::vector<std::vector<Poly>> out;
        for (const auto& v : basA) {
            std::vector<Poly> w;
            for (const auto& x : v) w.push_back((x * eA) % modulus);
            out.push_back(std::move(w));
        }
        for (const auto& v : basB) {
            std::vector<Poly> w;
            for (const auto& x : v) w.push_back((x * eB) % modulus);
            out.push_back(std::move(w));
        }
        return out;
    }
}

struct ColoringModule {
    Ring R;
    int dim = 1;
    int narcs = 0;
    int base_arc = 0;
    std::vector<std::vector<QuotElem>> basis; // reduced: base-arc block pinned to 0

    int rank() const { return (int)basis.size(); }

    // a generator scaled so its first coordinate on `arc` is 1 (when invertible)
    std::vector<QuotElem> normalized_generator(int arc = 1, int k = 0) const {
        std::vector<QuotElem> v = basis.at(k);
        QuotElem s = v[dim * arc].inv();
        for (auto& x : v) x *= s;
        return v;
    }
};

struct SnfReport : std::runtime_error {
    std::vector<Poly> divisors;
    SnfReport(std::vector<Poly> d)
        : std::runtime_error("modulus has repeated factors; elementary divisors reported"),
          divisors(std::move(d)) {}
};

// Smith normal form over F[t] of a Laurent matrix (after clearing t-powers):
// returns the nonzero elementary divisors, monic.
inline std::vector<Poly> elementary_divisors(const Matrix<Laurent>& S) {
    Field F = S.e[0].field();
    int n = S.n, m = S.m;
    std::vector<std::vector<Poly>> A(n, std::vector<Poly>(m, Poly(F)));
    for (int i = 0; i < n; ++i) {
        // clear denominators by a per-row unit t^k only
        int mrow = 0;
        for (int j = 0; j < m; ++j)
            if (!S.at(i, j).is_zero()) mrow = std::min(mrow, S.at(i, j).lo());
        for (int j = 0; j < m; ++j) {
            const Laurent& l = S.at(i, j);
            if (l.is_zero()) continue;
            A[i][j] = Poly::tpow(F, l.minexp - mrow, FE(F, 1L)) * l.p;
        }
    }
    std::vector<Poly> out;
    int top = 0;
    auto degree = [](const Poly& p) { return p.deg(); };
    while (top < n && top < m) {
        // find a nonzero entry of minimal degree
        int bi = -1, bj = -1;
        for (int i = top; i < n; ++i)
            for (int j = top; j < m; ++j)
                if (!A[i][j].is_zero() && (bi < 0 || degree(A[i][j]) < degree(A[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        std::swap(A[top], A[bi]);
        for (int i = top; i < n; ++i) std::swap(A[i][top], A[i][bj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = top + 1; i < n; ++i) {
                if (A[i][top].is_zero()) continue;
                Poly q, r;
                poly_divmod(A[i][top], A[top][top], q, r);
                for (int j = top; j < m; ++j) A[i][j] = A[i][j] - q * A[top][j];
                if (!r.is_zero()) {
                    std::swap(A[top], A[i]);
                    clean = false;
                }
            }
            for (int j = top + 1; j < m; ++j) {
                if (A[top][j].is_zero()) continue;
                Poly q, r;
                poly_divmod(A[top][j], A[top][top], q, r);
                for (int i = top; i < n; ++i) A[i][j] = A[i][j] - q * A[i][top];
                if (!r.is_zero()) {
                    for (int i = top; i < n; ++i) std::swap(A[i][top], A[i][j]);
                    clean = false;
                }
            }
        }
        out.push_back(A[top][top].monic());
        ++top;
    }
    // enforce divisibility chain
    for (size_t i = 0; i + 1 < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j) {
            Poly g = poly_gcd(out[i], out[j]);
            Poly l = (out[i] * out[j]) / g;
            out[i] = g;
            out[j] = l.monic();
        }
    return out;
}

// Reduced coloring module over F[t,t^-1]/(delta): solutions with the base
// arc's color pinned to zero (a complement of the constant colorings).
// For a delta with repeated factors the quotient is not a product of fields;
// the solver then reports the elementary divisors of the full system instead.
inline ColoringModule solve_colorings(const KnotDiagram& D, const ArcRep& f, const Laurent& delta,
                                      int base_arc = 0) {
    Poly modulus = QuotRing::make(delta)->modulus;
    for (const auto& [g, mult] : squarefree_decompose(modulus))
        if (mult > 1) {
            Matrix<Laurent> S = coloring_system(D, f);
            throw SnfReport(elementary_divisors(S));
        }
    ColoringModule col;
    col.R = QuotRing::make(delta);
    col.dim = f.dim;
    col.narcs = D.narcs();
    col.base_arc = base_arc;
    Matrix<Laurent> S = coloring_system(D, f);
    std::vector<int> pin;
    for (int i = 0; i < f.dim; ++i) pin.push_back(f.dim * base_arc + i);
    for (auto& v : kernel_mod(S, col.R->modulus, pin)) {
        std::vector<QuotElem> w;
        w.reserve(v.size());
        for (auto& x : v) w.emplace_back(col.R, x);
        col.basis.push_back(std::move(w));
    }
    return col;
}

// check one vector against every crossing relation
inline bool is_coloring(const KnotDiagram& D, const ArcRep& f, const ColoringModule& col,
                        const std::vector<QuotElem>& C) {
    int d = col.dim;
    Ring R = col.R;
    for (const auto& c : D.crossings) {
        for (int i = 0; i < d; ++i) {
            QuotElem acc = C[d * c.gamma + i] - C[d * c.beta + i];
            for (int j = 0; j < d; ++j)
                acc -= QuotElem(R, f.M[c.beta].at(i, j)) *
                       (C[d * c.alpha + j] - C[d * c.beta + j]);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

// Exhaustive coloring count over the Alexander quandle X = F_p with
// x * y = t x + (1-t) y; the brute-force oracle for the linear solver.
inline long enumerate_finite(const KnotDiagram& D, long p, long tval, long guard = 100000000L) {
    int n = D.narcs();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= (double)p;
    if (total > (double)guard) throw std::domain_error("finite enumeration too large");
    std::vector<long> col(n, 0);
    long count = 0;
    auto mod = [&](long x) { return ((x % p) + p) % p; };
    while (true) {
        bool ok = true;
        for (const auto& c : D.crossings)
            if (mod(tval * col[c.alpha] + (1 - tval) * col[c.beta]) != col[c.gamma]) {
                ok = false;
                break;
            }
        if (ok) ++count;
        int i = 0;
        while (i < n && ++col[i] == p) col[i++] = 0;
        if (i == n) break;
    }
    return count;
}

} // namespace kp

#endif
