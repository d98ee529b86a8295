#ifndef KNOTPAIR_QUOT_HPP
#define KNOTPAIR_QUOT_HPP

#include <memory>
#include <optional>

#include "laurent.hpp"

namespace kp {

// Raised when inversion meets a zero divisor; carries the discovered proper
// factor of the modulus so the caller can CRT-split.
struct ZeroDivisorSplit : std::runtime_error {
    Poly factor;
    explicit ZeroDivisorSplit(Poly f)
        : std::runtime_error("zero divisor modulo Delta"), factor(std::move(f)) {}
};

struct QuotRing;
using Ring = std::shared_ptr<const QuotRing>;

// F[t,t^-1]/(Delta). The modulus is stored as an ordinary monic polynomial with
// nonzero constant term; the unit shed during normalization is kept for
// identity checks "up to units".
struct QuotRing : std::enable_shared_from_this<QuotRing> {
    Poly modulus;       // monic, nonzero constant term
    FE shed_lead;       // leading coefficient divided out
    int shed_tpow = 0;  // t-power divided out
    Poly t_inverse;     // representative of t^-1

    static Ring make(const Laurent& delta) {
        if (delta.is_zero()) throw std::domain_error("zero modulus");
        auto R = std::make_shared<QuotRing>();
        R->shed_tpow = delta.lo();
        Poly m = delta.p;
        R->shed_lead = m.lead();
        R->modulus = m.monic();
        if (R->modulus.coeff(0).is_zero()) throw std::domain_error("modulus has zero constant term");
        // t^-1 = -(m - m0)/t / m0 reduced: from m(t) = 0, t * h(t) = -m0
        // with h = (m - m0)/t, so t^-1 = h / (-m0).
        Poly h(R->modulus.F);
        for (int i = 1; i <= R->modulus.deg(); ++i) h.a.push_back(R->modulus.a[i]);
        h.trim();
        R->t_inverse = (-R->modulus.coeff(0).inv()) * h;
        return R;
    }
    static Ring make(const Poly& delta) { return make(Laurent(delta, 0)); }

    Field field() const { return modulus.F; }
    int deg() const { return modulus.deg(); }

    Poly reduce(const Poly& v) const { return v % modulus; }
    Poly reduce(const Laurent& l) const {
        Poly v = reduce(l.p);
        int e = l.minexp;
        Poly ti = t_inverse;
        while (e < 0) {
            v = reduce(v * ti);
            ++e;
        }
        while (e > 0) {
            v = reduce(v * Poly::from_longs(modulus.F, {0, 1}));
            --e;
        }
        return v;
    }
};

struct QuotElem {
    Ring R;
    Poly v; // deg < deg(modulus)

    QuotElem() = default;
    explicit QuotElem(Ring r) : R(std::move(r)), v(R->field()) {}
    QuotElem(Ring r, Poly p) : R(std::move(r)), v(R->reduce(p)) {}
    QuotElem(Ring r, const Laurent& l) : R(std::move(r)), v(R->reduce(l)) {}
    QuotElem(Ring r, long n) : R(std::move(r)), v(Poly::constant(R->field(), FE(R->field(), n))) {}
    QuotElem(Ring r, FE c) : R(std::move(r)), v(Poly::constant(R->field(), std::move(c))) {}

    bool is_zero() const { return v.is_zero(); }
    friend bool operator==(const QuotElem& a, const QuotElem& b) { return a.v == b.v; }
    friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

    QuotElem operator-() const { return {R, -v}; }
    friend QuotElem operator+(const QuotElem& a, const QuotElem& b) { return {a.R, a.v + b.v}; }
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b) { return {a.R, a.v - b.v}; }
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b) {
        return {a.R, a.R->reduce(a.v * b.v)};
    }
    friend QuotElem operator*(const FE& s, const QuotElem& b) { return {b.R, s * b.v}; }
    QuotElem& operator+=(const QuotElem& o) { return *this = *this + o; }
    QuotElem& operator-=(const QuotElem& o) { return *this = *this - o; }
    QuotElem& operator*=(const QuotElem& o) { return *this = *this * o; }

    // extended Euclid against the modulus; throws ZeroDivisorSplit on a proper
    // common factor, domain_error on zero
    QuotElem inv() const {
        if (is_zero()) throw std::domain_error("inversion of zero residue");
        Poly r0 = R->modulus, r1 = v, s0(R->field()), s1 = Poly::from_longs(R->field(), {1});
        while (!r1.is_zero()) {
            Poly q, rem;
            poly_divmod(r0, r1, q, rem);
            Poly s2 = s0 - q * s1;
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        if (r0.deg() > 0) throw ZeroDivisorSplit(r0.monic());
        return {R, R->reduce(r0.lead().inv() * s0)};
    }

    QuotElem bar() const {
        QuotElem ti(R, R->t_inverse), acc(R);
        QuotElem pw(R, 1L);
        for (int i = 0; i <= v.deg(); ++i) {
            acc += v.a[i].conj() * pw;
            pw = pw * ti;
        }
        return acc;
    }

    std::complex<double> eval_c(std::complex<double> z) const { return v.eval_c(z); }
    std::string str() const { return Laurent(v, 0).str(); }
};

inline QuotElem quot_invert(const QuotElem& x) { return x.inv(); }

// split modulus m into coprime A*B with the g-part saturated into A
inline std::pair<Poly, Poly> coprime_split(const Poly& m, const Poly& g) {
    Poly A = poly_gcd(m, g);
    if (A.deg() == 0 || A.deg() == m.deg()) throw std::domain_error("trivial split factor");
    Poly B = m / A;
    while (true) {
        Poly c = poly_gcd(A, B);
        if (c.deg() == 0) break;
        A = A * c;
        B = B / c;
    }
    return {A, B};
}

// Laurent-series trace: constant term of the ascending expansion of x/Delta
// minus constant term of the descending one. `extra` pads the recurrence; the
// result must not depend on it.
inline FE trace_map(const Laurent& x, const Poly& delta, int extra = 0) {
    Field F = delta.F;
    if (delta.is_zero() || delta.coeff(0).is_zero())
        throw std::domain_error("trace needs modulus with nonzero constant term");
    auto ascending_const = [&](const Laurent& y, const Poly& den) {
        // series q_k of y/den, valuation = y.lo(); recurrence up to k = extra
        if (y.is_zero()) return FE(F);
        int k0 = y.lo();
        if (k0 > 0) return FE(F);
        FE c0inv = den.coeff(0).inv();
        std::vector<FE> q; // q[j] = coefficient of t^(k0+j)
        int upto = -k0 + extra;
        for (int j = 0; j <= upto; ++j) {
            FE s = y.coeff(k0 + j);
            for (int l = 1; l <= den.deg() && l <= j; ++l) s -= den.coeff(l) * q[j - l];
            q.push_back(s * c0inv);
        }
        return q[-k0];
    };
    FE iplus = ascending_const(x, delta);
    // descending: substitute s = 1/t
    int D = delta.deg();
    Poly dens(F);
    dens.a.assign(D + 1, FE(F));
    for (int i = 0; i <= D; ++i) dens.a[D - i] = delta.a[i];
    dens.trim();
    Laurent ys(F);
    for (int e = x.lo(); e <= x.hi(); ++e) {
        FE c = x.coeff(e);
        if (!c.is_zero()) ys += Laurent::tpow(F, D - e, c); // x(1/s)*s^D
    }
    FE iminus = ascending_const(ys, dens);
    return iplus - iminus;
}

inline FE trace_map(const QuotElem& x, int extra = 0) {
    return trace_map(Laurent(x.v, 0), x.R->modulus, extra);
}

// Delta reciprocal up to a * t^N (bar(Delta) = unit * Delta)
inline bool check_reciprocal(const Laurent& delta) {
    Laurent b = delta.bar();
    return eq_up_to_unit(b, delta);
}
inline bool check_reciprocal(const Poly& delta) { return check_reciprocal(Laurent(delta, 0)); }

// solve Delta = a * t^N * bar(Delta) for the unit pair, if it exists
inline std::optional<std::pair<FE, int>> reciprocal_unit(const Laurent& delta) {
    if (delta.is_zero()) return std::nullopt;
    int N = delta.lo() + delta.hi();
    FE denom = delta.coeff(delta.lo()).conj();
    if (denom.is_zero()) return std::nullopt;
    FE a = delta.coeff(delta.hi()) / denom;
    Laurent rhs = delta.bar();
    rhs = Laurent(a * rhs.p, rhs.minexp + N);
    if (rhs == delta) return std::make_pair(a, N);
    return std::nullopt;
}

} // namespace kp

#endif
