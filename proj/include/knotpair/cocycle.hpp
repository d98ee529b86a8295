#ifndef KNOTPAIR_COCYCLE_HPP
#define KNOTPAIR_COCYCLE_HPP

#include <array>
#include <functional>
#include <map>

#include "diagram.hpp"

namespace kp {

// Alexander quandle on F_p: x * y = t x + (1-t) y
struct AlexanderQuandle {
    long p = 7;
    long t = 3;

    long mod(long x) const { return ((x % p) + p) % p; }
    long op(long x, long y) const { return mod(t * x + (1 - t) * y); }
    long tinv() const {
        // Fermat inverse; p prime
        long r = 1, b = mod(t), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
};

using CocycleFn = std::function<long(long, long)>;

// 2-cocycle condition over the quandle, checked on every triple:
//   phi(x,z) - phi(x,y) - phi(x*y,z) + phi(x*z,y*z) = 0 and phi(x,x) = 0
inline bool is_cocycle(const AlexanderQuandle& X, const CocycleFn& phi) {
    for (long x = 0; x < X.p; ++x) {
        if (X.mod(phi(x, x)) != 0) return false;
        for (long y = 0; y < X.p; ++y)
            for (long z = 0; z < X.p; ++z) {
                long lhs = phi(x, z) - phi(x, y) - phi(X.op(x, y), z) +
                           phi(X.op(x, z), X.op(y, z));
                if (X.mod(lhs) != 0) return false;
            }
    }
    return true;
}

// the quadratic family lambda (x-y)(x+ty)
inline CocycleFn mochizuki_cocycle(const AlexanderQuandle& X, long lambda = 1) {
    return [X, lambda](long x, long y) { return X.mod(lambda * (x - y) * (x + X.t * y)); };
}

// phi_psi(x, y) = psi(x - y, y - t^-1 y) for a scalar bilinear psi(a,b) = a b
inline CocycleFn phi_from_psi(const AlexanderQuandle& X) {
    long c = X.mod(1 - X.tinv());
    return [X, c](long x, long y) { return X.mod((x - y) * c * y); };
}

// self-pairing of a finite coloring through psi(a,b) = a b:
// sum over crossings of eps * (C(alpha)-C(beta)) * (C(beta) - t^-1 C(beta))
inline long finite_self_pairing(const KnotDiagram& D, const AlexanderQuandle& X,
                                const std::vector<long>& C) {
    long c = X.mod(1 - X.tinv());
    long acc = 0;
    for (const auto& cr : D.crossings)
        acc += cr.sign * X.mod((C[cr.alpha] - C[cr.beta]) * c * C[cr.beta]);
    return X.mod(acc);
}

inline long cocycle_value(const KnotDiagram& D, const AlexanderQuandle& X, const CocycleFn& phi,
                          const std::vector<long>& C) {
    long acc = 0;
    for (const auto& cr : D.crossings) acc += cr.sign * phi(C[cr.alpha], C[cr.beta]);
    return X.mod(acc);
}

// multiset {I_Phi(C)} over every coloring, as value -> multiplicity
inline std::map<long, long> cocycle_invariant(const KnotDiagram& D, const AlexanderQuandle& X,
                                              const CocycleFn& phi, long guard = 100000000L) {
    int n = D.narcs();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= (double)X.p;
    if (total > (double)guard) throw std::domain_error("coloring enumeration too large");
    std::map<long, long> out;
    std::vector<long> col(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& cr : D.crossings)
            if (X.op(col[cr.alpha], col[cr.beta]) != col[cr.gamma]) {
                ok = false;
                break;
            }
        if (ok) ++out[cocycle_value(D, X, phi, col)];
        int i = 0;
        while (i < n && ++col[i] == X.p) col[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// ---- double-delta tangle check over the rank-2 quandle F_p^2 ----

using Vec2 = std::array<long, 2>;

// Two parallel bands crossing: (a,b) passes over (c,d); the under strands c, d
// each run below a then b, crossings taken in the order (a,c), (a,d), (b,c),
// (b,d) with signs (-, +, -, +). Each crossing contributes
// sign * phi(under-in, over) with phi(x,y) = psi(x-y, (1-t^-1) y) for the
// wedge form psi on F_p^2, and the under color updates by x -> t x + (1-t) y.
// The over band's strands swap printed positions, so u, v continue b, a.
struct DoubleDeltaResult {
    long weight_sum;
    long first_form;  // psi((1-t)(a-b), c-d)
    long second_form; // psi((1-t)(u-v), d-c)
    bool holds() const { return weight_sum == first_form && weight_sum == second_form; }
};

inline DoubleDeltaResult double_delta_weight(long p, long t, const Vec2& a, const Vec2& b,
                                             const Vec2& c, const Vec2& d) {
    auto mod = [&](long x) { return ((x % p) + p) % p; };
    auto wedge = [&](const Vec2& x, const Vec2& y) { return mod(x[0] * y[1] - x[1] * y[0]); };
    auto op = [&](const Vec2& x, const Vec2& y) {
        return Vec2{mod(t * x[0] + (1 - t) * y[0]), mod(t * x[1] + (1 - t) * y[1])};
    };
    long ti = -1; // t^-1 mod p
    for (long k = 1; k < p; ++k)
        if (mod(t * k) == 1) ti = k;
    if (ti < 0) throw std::domain_error("t not invertible mod p");
    auto phi = [&](const Vec2& x, const Vec2& y) {
        Vec2 dx{mod(x[0] - y[0]), mod(x[1] - y[1])};
        Vec2 sy{mod((1 - ti) * y[0]), mod((1 - ti) * y[1])};
        return wedge(dx, sy);
    };
    long w = 0;
    Vec2 cu = c, du = d;
    w -= phi(cu, a);
    cu = op(cu, a);
    w += phi(du, a);
    du = op(du, a);
    w -= phi(cu, b);
    cu = op(cu, b);
    w += phi(du, b);
    du = op(du, b);
    DoubleDeltaResult r{};
    r.weight_sum = mod(w);
    Vec2 ab{mod((1 - t) * (a[0] - b[0])), mod((1 - t) * (a[1] - b[1]))};
    Vec2 cd{mod(c[0] - d[0]), mod(c[1] - d[1])};
    r.first_form = wedge(ab, cd);
    // the over band's strands swap printed positions: u continues b, v continues a
    Vec2 uv{mod((1 - t) * (b[0] - a[0])), mod((1 - t) * (b[1] - a[1]))};
    Vec2 dc{mod(d[0] - c[0]), mod(d[1] - c[1])};
    r.second_form = wedge(uv, dc);
    return r;
}

} // namespace kp

#endif
