#ifndef KNOTPAIR_NUMFIELD_HPP
#define KNOTPAIR_NUMFIELD_HPP

#include <cassert>
#include <complex>
#include <memory>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace kp {

// Coefficient field Q[z]/(p) with a designated involution (an order <= 2 ring
// automorphism given on coordinate vectors) and a designated complex root of p.
struct NumberField {
    std::vector<Rat> minpoly;                 // monic, size deg+1, minpoly[deg] == 1
    std::vector<std::vector<Rat>> involution; // deg x deg, action on coordinates
    std::complex<double> embedding;           // the designated root of minpoly
    std::string gen = "z";
    int cyclotomic_order = 0;                 // d if this is Q(zeta_d), else 0

    int degree() const { return (int)minpoly.size() - 1; }

    // rows of z^k reduced mod minpoly for k = 0 .. 2*deg-2
    std::vector<std::vector<Rat>> powtab;

    void build_powtab() {
        int d = degree();
        powtab.assign(std::max(2 * d - 1, 1), std::vector<Rat>(d, Rat(0)));
        powtab[0][0] = 1;
        for (int k = 1; k < (int)powtab.size(); ++k) {
            std::vector<Rat> v(d, Rat(0));
            // multiply powtab[k-1] by z
            const auto& p = powtab[k - 1];
            Rat top = p[d - 1];
            for (int i = d - 1; i > 0; --i) v[i] = p[i - 1];
            v[0] = 0;
            if (top != 0)
                for (int i = 0; i < d; ++i) v[i] -= top * minpoly[i];
            powtab[k] = std::move(v);
        }
    }

    static std::shared_ptr<const NumberField> rationals() {
        auto F = std::make_shared<NumberField>();
        F->minpoly = {Rat(0), Rat(1)}; // z
        F->involution = {{Rat(1)}};
        F->embedding = {0.0, 0.0};
        F->build_powtab();
        return F;
    }

    // Q(zeta_d), minimal polynomial = d-th cyclotomic, involution zeta -> zeta^-1,
    // embedding exp(2 pi i / d).
    static std::shared_ptr<const NumberField> cyclotomic(int d);
};

using Field = std::shared_ptr<const NumberField>;

// Element of a NumberField: coordinate vector in the generator power basis.
struct FE {
    Field F;
    std::vector<Rat> c;

    FE() = default;
    FE(Field f, std::vector<Rat> v) : F(std::move(f)), c(std::move(v)) {}
    explicit FE(Field f) : F(std::move(f)), c(F->degree(), Rat(0)) {}
    FE(Field f, long n) : F(std::move(f)), c(F->degree(), Rat(0)) { c[0] = n; }
    FE(Field f, const Rat& r) : F(std::move(f)), c(F->degree(), Rat(0)) { c[0] = r; }

    bool is_zero() const {
        for (auto& x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    Rat rational_part() const { return c.empty() ? Rat(0) : c[0]; }

    friend bool operator==(const FE& a, const FE& b) { return a.c == b.c; }
    friend bool operator!=(const FE& a, const FE& b) { return !(a == b); }

    FE operator-() const {
        FE r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend FE operator+(const FE& a, const FE& b) {
        FE r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend FE operator-(const FE& a, const FE& b) {
        FE r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend FE operator*(const FE& a, const FE& b) {
        int d = a.F->degree();
        std::vector<Rat> conv(2 * d - 1 > 0 ? 2 * d - 1 : 1, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b.c[j] == 0) continue;
                conv[i + j] += a.c[i] * b.c[j];
            }
        }
        FE r(a.F);
        for (int k = 0; k < (int)conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& row = a.F->powtab[k];
            for (int i = 0; i < d; ++i) r.c[i] += conv[k] * row[i];
        }
        return r;
    }
    friend FE operator*(const Rat& s, const FE& a) {
        FE r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    FE& operator+=(const FE& b) { return *this = *this + b; }
    FE& operator-=(const FE& b) { return *this = *this - b; }
    FE& operator*=(const FE& b) { return *this = *this * b; }

    FE conj() const {
        int d = F->degree();
        FE r(F);
        for (int i = 0; i < d; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < d; ++j) r.c[j] += F->involution[j][i] * c[i];
        }
        return r;
    }

    // inverse by extended Euclid against the minimal polynomial
    FE inv() const;

    std::complex<double> embed() const {
        std::complex<double> z = F->embedding, acc = 0.0, p = 1.0;
        for (int i = 0; i < (int)c.size(); ++i) {
            acc += to_double(c[i]) * p;
            p *= z;
        }
        return acc;
    }

    std::string str() const; // polynomial in the generator, descending powers
};

inline FE operator/(const FE& a, const FE& b) { return a * b.inv(); }

// ---- extended Euclid over Q[x] on raw coefficient vectors ----
namespace detail {
inline void rv_trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
inline std::vector<Rat> rv_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
inline std::vector<Rat> rv_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rv_trim(a);
    return a;
}
// a mod b and quotient, b nonzero
inline void rv_divmod(std::vector<Rat> a, const std::vector<Rat>& b, std::vector<Rat>& q,
                      std::vector<Rat>& r) {
    q.clear();
    rv_trim(a);
    if (a.size() < b.size()) {
        r = a;
        return;
    }
    q.assign(a.size() - b.size() + 1, Rat(0));
    Rat lead = b.back();
    for (int k = (int)a.size() - (int)b.size(); k >= 0; --k) {
        Rat f = a[k + b.size() - 1] / lead;
        q[k] = f;
        if (f != 0)
            for (size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
    }
    rv_trim(a);
    r = a;
}
} // namespace detail

inline FE FE::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in number field");
    int d = F->degree();
    if (d == 1) {
        FE r(F);
        r.c[0] = Rat(1) / c[0];
        return r;
    }
    using detail::rv_divmod;
    using detail::rv_mul;
    using detail::rv_sub;
    std::vector<Rat> r0 = F->minpoly, r1 = c, s0 = {}, s1 = {Rat(1)};
    detail::rv_trim(r1);
    while (!r1.empty()) {
        std::vector<Rat> q, rem;
        rv_divmod(r0, r1, q, rem);
        std::vector<Rat> s2 = rv_sub(s0, rv_mul(q, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd, degree 0 since minpoly is irreducible over Q
    if (r0.size() != 1) throw std::domain_error("minimal polynomial not irreducible");
    FE out(F);
    for (size_t i = 0; i < s0.size() && i < (size_t)d; ++i) out.c[i] = s0[i] / r0[0];
    return out;
}

inline std::string FE::str() const {
    int d = F->degree();
    std::ostringstream os;
    bool first = true;
    for (int i = d - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        Rat m = abs(a);
        if (i == 0 || m != 1) {
            os << rat_str(m);
            if (i > 0) os << "*";
        }
        if (i == 1)
            os << F->gen;
        else if (i > 1)
            os << F->gen << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// n-th cyclotomic polynomial over Q by iterated division of x^n - 1
inline std::vector<Rat> cyclotomic_poly_raw(int n) {
    std::vector<Rat> phi(n + 1, Rat(0));
    phi[0] = -1;
    phi[n] = 1;
    for (int e = 1; e < n; ++e) {
        if (n % e != 0) continue;
        auto sub = cyclotomic_poly_raw(e);
        std::vector<Rat> q, r;
        detail::rv_divmod(phi, sub, q, r);
        phi = q;
    }
    return phi;
}

// same field, identity involution (for forms that do not conjugate coefficients)
inline Field with_trivial_involution(const Field& F) {
    auto G = std::make_shared<NumberField>(*F);
    int d = G->degree();
    G->involution.assign(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) G->involution[i][i] = 1;
    return G;
}

inline Field NumberField::cyclotomic(int d) {
    assert(d >= 1);
    std::vector<Rat> phi = cyclotomic_poly_raw(d);
    auto F = std::make_shared<NumberField>();
    F->minpoly = phi;
    F->cyclotomic_order = d;
    int deg = (int)phi.size() - 1;
    // involution zeta -> zeta^(d-1); build coordinate matrix column by column
    F->involution.assign(deg, std::vector<Rat>(deg, Rat(0)));
    F->build_powtab();
    {
        // coordinates of zeta^(-k) = zeta^(d-k) reduced mod phi
        // compute powers of zeta beyond powtab range by repeated multiplication
        std::vector<std::vector<Rat>> zpow(d, std::vector<Rat>(deg, Rat(0)));
        zpow[0][0] = 1;
        for (int k = 1; k < d; ++k) {
            const auto& p = zpow[k - 1];
            std::vector<Rat> v(deg, Rat(0));
            Rat top = p[deg - 1];
            for (int i = deg - 1; i > 0; --i) v[i] = p[i - 1];
            v[0] = 0;
            if (top != 0)
                for (int i = 0; i < deg; ++i) v[i] -= top * phi[i];
            zpow[k] = std::move(v);
        }
        for (int k = 0; k < deg; ++k) {
            const auto& img = zpow[(d - k) % d]; // image of z^k
            for (int i = 0; i < deg; ++i) F->involution[i][k] = img[i];
        }
    }
    double th = 2.0 * 3.14159265358979323846 / d;
    F->embedding = {std::cos(th), std::sin(th)};
    return F;
}

} // namespace kp

#endif
