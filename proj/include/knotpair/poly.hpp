#ifndef KNOTPAIR_POLY_HPP
#define KNOTPAIR_POLY_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "numfield.hpp"

namespace kp {

// Dense polynomial over a NumberField.
struct Poly {
    Field F;
    std::vector<FE> a; // a[i] = coefficient of t^i, trimmed

    Poly() = default;
    explicit Poly(Field f) : F(std::move(f)) {}
    Poly(Field f, std::vector<FE> v) : F(std::move(f)), a(std::move(v)) { trim(); }
    static Poly constant(Field f, FE c) {
        Poly p(f);
        if (!c.is_zero()) p.a = {std::move(c)};
        return p;
    }
    static Poly from_longs(Field f, std::vector<long> cs) {
        Poly p(f);
        for (long v : cs) p.a.push_back(FE(f, v));
        p.trim();
        return p;
    }
    static Poly tpow(Field f, int k, FE c) {
        Poly p(f);
        p.a.assign(k + 1, FE(f));
        p.a[k] = std::move(c);
        p.trim();
        return p;
    }

    void trim() {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    bool is_zero() const { return a.empty(); }
    int deg() const { return (int)a.size() - 1; } // -1 for zero
    FE coeff(int i) const { return (i >= 0 && i < (int)a.size()) ? a[i] : FE(F); }
    FE lead() const { return a.empty() ? FE(F) : a.back(); }

    friend bool operator==(const Poly& x, const Poly& y) { return x.a == y.a; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.a) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly r = x;
        if (r.a.size() < y.a.size()) r.a.resize(y.a.size(), FE(x.F));
        for (size_t i = 0; i < y.a.size(); ++i) r.a[i] += y.a[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly(x.F);
        Poly r(x.F);
        r.a.assign(x.a.size() + y.a.size() - 1, FE(x.F));
        for (size_t i = 0; i < x.a.size(); ++i) {
            if (x.a[i].is_zero()) continue;
            for (size_t j = 0; j < y.a.size(); ++j) {
                if (y.a[j].is_zero()) continue;
                r.a[i + j] += x.a[i] * y.a[j];
            }
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const FE& s, const Poly& y) {
        Poly r = y;
        for (auto& c : r.a) c = s * c;
        r.trim();
        return r;
    }

    // coefficient-wise field involution (no t action)
    Poly conj_coeffs() const {
        Poly r = *this;
        for (auto& c : r.a) c = c.conj();
        return r;
    }

    FE eval(const FE& x) const {
        FE acc(F);
        for (int i = deg(); i >= 0; --i) acc = acc * x + a[i];
        return acc;
    }
    std::complex<double> eval_c(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (int i = deg(); i >= 0; --i) acc = acc * z + a[i].embed();
        return acc;
    }

    Poly derivative() const {
        Poly r(F);
        for (int i = 1; i <= deg(); ++i) r.a.push_back(Rat(i) * a[i]);
        r.trim();
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return lead().inv() * *this;
    }
};

inline void poly_divmod(const Poly& A, const Poly& B, Poly& Q, Poly& R) {
    if (B.is_zero()) throw std::domain_error("polynomial division by zero");
    Q = Poly(A.F);
    R = A;
    int db = B.deg();
    if (R.deg() >= db) Q.a.assign(R.deg() - db + 1, FE(A.F));
    FE linv = B.lead().inv();
    while (R.deg() >= db) {
        int k = R.deg() - db;
        FE f = R.lead() * linv;
        Q.a[k] = f;
        for (int i = 0; i <= db; ++i) R.a[k + i] -= f * B.a[i];
        R.trim();
    }
    Q.trim();
}

inline Poly operator/(const Poly& A, const Poly& B) {
    Poly Q, R;
    poly_divmod(A, B, Q, R);
    if (!R.is_zero()) throw std::domain_error("inexact polynomial division");
    return Q;
}
inline Poly operator%(const Poly& A, const Poly& B) {
    Poly Q, R;
    poly_divmod(A, B, Q, R);
    return R;
}

inline Poly poly_gcd(Poly x, Poly y) {
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    if (!x.is_zero()) x = x.monic();
    return x;
}

// Yun squarefree decomposition: returns list of (factor, multiplicity) with the
// factors pairwise coprime and squarefree, product of factor^mult = monic input.
inline std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.deg() <= 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = poly_gcd(f, fp);
    Poly b = f / a, c = fp / a, d = c - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        Poly g = poly_gcd(b, d);
        if (g.deg() > 0) out.push_back({g, i});
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Durand-Kerner root finding at the field's designated embedding.
inline std::vector<std::complex<double>> poly_roots(const Poly& p, int iters = 400) {
    int n = p.deg();
    std::vector<std::complex<double>> cs(n + 1), rt(n);
    for (int i = 0; i <= n; ++i) cs[i] = p.a[i].embed();
    for (int i = 0; i <= n; ++i) cs[i] /= cs[n];
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc = 1.0;
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        rt[i] = acc;
    }
    for (int it = 0; it < iters; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = 0.0;
            for (int k = n; k >= 0; --k) num = num * rt[i] + cs[k];
            std::complex<double> den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= rt[i] - rt[j];
            std::complex<double> delta = num / den;
            rt[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-15) break;
    }
    std::sort(rt.begin(), rt.end(), [](auto u, auto v) {
        double au = std::arg(u), av = std::arg(v);
        if (au < 0) au += 2 * 3.14159265358979323846;
        if (av < 0) av += 2 * 3.14159265358979323846;
        return au < av;
    });
    return rt;
}

} // namespace kp

#endif
