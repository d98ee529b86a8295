#ifndef KNOTPAIR_LAURENT_HPP
#define KNOTPAIR_LAURENT_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "poly.hpp"

namespace kp {

// Laurent polynomial: p * t^minexp with p an ordinary polynomial of nonzero
// constant term (zero has minexp = 0).
struct Laurent {
    Poly p;
    int minexp = 0;

    Laurent() = default;
    explicit Laurent(Field f) : p(f) {}
    Laurent(Poly q, int m = 0) : p(std::move(q)), minexp(m) { normalize(); }
    static Laurent tpow(Field f, int k, FE c) {
        return Laurent(Poly::constant(f, std::move(c)), k);
    }
    static Laurent constant(Field f, FE c) { return Laurent(Poly::constant(f, std::move(c)), 0); }

    Field field() const { return p.F; }

    void normalize() {
        if (p.is_zero()) {
            minexp = 0;
            return;
        }
        size_t v = 0;
        while (v < p.a.size() && p.a[v].is_zero()) ++v;
        if (v > 0) {
            p.a.erase(p.a.begin(), p.a.begin() + v);
            minexp += (int)v;
        }
    }

    bool is_zero() const { return p.is_zero(); }
    int lo() const { return minexp; }
    int hi() const { return minexp + p.deg(); }
    FE coeff(int e) const { return p.coeff(e - minexp); }

    friend bool operator==(const Laurent& x, const Laurent& y) {
        return x.p == y.p && (x.is_zero() || x.minexp == y.minexp);
    }
    friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

    Laurent operator-() const { return Laurent(-p, minexp); }
    friend Laurent operator+(const Laurent& x, const Laurent& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        int m = std::min(x.minexp, y.minexp);
        Poly r(x.p.F);
        r.a.assign(std::max(x.hi(), y.hi()) - m + 1, FE(x.p.F));
        for (int i = 0; i <= x.p.deg(); ++i) r.a[x.minexp - m + i] += x.p.a[i];
        for (int i = 0; i <= y.p.deg(); ++i) r.a[y.minexp - m + i] += y.p.a[i];
        r.trim();
        return Laurent(std::move(r), m);
    }
    friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }
    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        return Laurent(x.p * y.p, x.minexp + y.minexp);
    }
    friend Laurent operator*(const FE& s, const Laurent& y) { return Laurent(s * y.p, y.minexp); }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    // bar involution: t -> t^-1 and coefficient conjugation
    Laurent bar() const {
        if (is_zero()) return *this;
        Poly r(p.F);
        r.a.assign(p.a.size(), FE(p.F));
        for (size_t i = 0; i < p.a.size(); ++i) r.a[p.a.size() - 1 - i] = p.a[i].conj();
        r.trim();
        return Laurent(std::move(r), -hi());
    }

    std::complex<double> eval_c(std::complex<double> z) const {
        return p.eval_c(z) * std::pow(z, minexp);
    }

    // shed the t^minexp unit
    Poly poly_part() const { return p; }

    std::string str(const std::string& var = "t") const;
};

// Scale to a primitive integral representative with positive first nonzero
// rational coordinate of the leading coefficient; unit part t^k is dropped.
inline Poly unit_normalize(const Poly& q) {
    if (q.is_zero()) return q;
    mpz_class den(1), num(0);
    for (const auto& c : q.a)
        for (const auto& r : c.c) {
            if (r == 0) continue;
            mpz_class d = den_of(r), n = abs(num_of(r));
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
    Rat scale(den, num == 0 ? mpz_class(1) : num);
    scale.canonicalize();
    Poly r = FE(q.F, scale) * q;
    mpz_class g(0);
    for (const auto& c : r.a)
        for (const auto& x : c.c) {
            mpz_class n = abs(num_of(x));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    if (g > 1) r = FE(q.F, Rat(mpz_class(1), g)) * r;
    // sign: first nonzero coordinate of the leading coefficient positive
    for (const auto& c : r.lead().c)
        if (c != 0) {
            if (c < 0) r = -r;
            break;
        }
    return r;
}
inline Poly unit_normalize(const Laurent& l) { return unit_normalize(l.p); }

// equality up to a * t^N with a a unit of the coefficient field times t-power;
// here "unit" means any nonzero field element (coefficient-field scalars)
inline bool eq_up_to_unit(const Laurent& x, const Laurent& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    if (x.p.deg() != y.p.deg()) return false;
    FE r = x.p.lead() / y.p.lead();
    return x.p == r * y.p;
}
inline bool eq_up_to_unit(const Poly& x, const Poly& y) {
    return eq_up_to_unit(Laurent(x, 0), Laurent(y, 0));
}

inline std::string Laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = hi(); e >= lo(); --e) {
        FE c = coeff(e);
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            Rat r = c.rational_part();
            if (r < 0) {
                neg = true;
                r = -r;
            }
            if (r != 1 || e == 0) cs = rat_str(r);
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (!cs.empty()) {
            os << cs;
            if (e != 0) os << "*";
        }
        if (e == 1)
            os << var;
        else if (e != 0)
            os << var << "^" << e;
    }
    return os.str();
}

// ---- parser for the canonical text form ----
namespace detail {
struct PolyParser {
    const std::string& s;
    size_t i = 0;
    Field F;
    std::string var;
    PolyParser(const std::string& str, Field f, std::string v) : s(str), F(std::move(f)), var(std::move(v)) {}

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Rat number() {
        ws();
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
        if (j == i) throw std::invalid_argument("expected number at '" + s.substr(i) + "'");
        Rat r = rat_parse(s.substr(i, j - i));
        i = j;
        return r;
    }
    int integer() {
        ws();
        bool neg = eat('-');
        Rat r = number();
        long v = (long)r.get_d();
        return neg ? -(int)v : (int)v;
    }

    // symbol^k | symbol | number, over generator g
    // zpoly: sum of signed terms c[*g[^k]]
    FE zpoly() {
        FE acc(F);
        bool lead = true;
        while (true) {
            ws();
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!lead) break;
            lead = false;
            ws();
            Rat c(1);
            bool have_num = i < s.size() && std::isdigit((unsigned char)s[i]);
            if (have_num) c = number();
            int e = 0;
            ws();
            if (have_num && eat('*')) ws();
            if (i < s.size() && s.compare(i, F->gen.size(), F->gen) == 0) {
                i += F->gen.size();
                e = 1;
                if (eat('^')) e = integer();
            } else if (!have_num) {
                throw std::invalid_argument("expected coefficient term");
            }
            FE term(F);
            if (e >= F->degree()) throw std::invalid_argument("generator power too large");
            term.c[e] = sign < 0 ? -c : c;
            acc += term;
            ws();
            if (i >= s.size() || s[i] == ')') break;
        }
        return acc;
    }

    Laurent parse() {
        Laurent acc(F);
        bool lead = true;
        while (true) {
            ws();
            if (i >= s.size()) break;
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!lead) throw std::invalid_argument("expected '+' or '-'");
            lead = false;
            ws();
            FE c(F, 1L);
            bool have_coef = false;
            if (eat('(')) {
                c = zpoly();
                if (!eat(')')) throw std::invalid_argument("missing ')'");
                have_coef = true;
            } else if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
                c = FE(F, number());
                have_coef = true;
            } else if (i < s.size() && s.compare(i, F->gen.size(), F->gen) == 0 &&
                       s.compare(i, var.size(), var) != 0) {
                c = zpoly();
                have_coef = true;
            }
            int e = 0;
            ws();
            if (have_coef && eat('*')) ws();
            if (i < s.size() && s.compare(i, var.size(), var) == 0) {
                i += var.size();
                e = 1;
                if (eat('^')) e = integer();
            } else if (!have_coef) {
                throw std::invalid_argument("expected term");
            }
            if (sign < 0) c = -c;
            acc += Laurent::tpow(F, e, c);
        }
        return acc;
    }
};
} // namespace detail

inline Laurent parse_laurent(const std::string& text, Field F, const std::string& var = "t") {
    detail::PolyParser P(text, F, var);
    Laurent l = P.parse();
    P.ws();
    if (P.i != text.size()) throw std::invalid_argument("trailing input: " + text.substr(P.i));
    return l;
}

} // namespace kp

#endif
