#ifndef KNOTPAIR_SIGNATURE_HPP
#define KNOTPAIR_SIGNATURE_HPP

#include <algorithm>
#include <cmath>

#include "pairing.hpp"

namespace kp {

struct SignatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonGenericTwist : SignatureError {
    NonGenericTwist() : SignatureError("twist parameter is non-generic") {}
};

constexpr double SIG_TOL = 1e-9;

// pairing data with the t-action remembered through the modulus: the space is
// the coloring module, the form the (sqrt(-1)-scaled) crossing sum
struct HermitianSpace {
    GramForm G;
    Poly delta; // characteristic polynomial of the t-action

    int dim() const { return G.Q.n; }
};

inline HermitianSpace hermitian_space(const KnotDiagram& D, const ArcRep& f, const PsiForm& psi,
                                      const ColoringModule& col) {
    HermitianSpace H;
    H.G = gram(D, f, psi, col);
    H.delta = col.R->modulus;
    return H;
}

using CMat = std::vector<std::vector<std::complex<double>>>;

struct Component {
    std::complex<double> z; // generalized eigenvalue of the t-action
    CMat form;              // the pairing matrix evaluated at z (times i if flagged)
};

// split by roots of the t-action polynomial, merging numerically equal ones
inline std::vector<Component> primary_decompose(const HermitianSpace& H) {
    std::vector<std::complex<double>> roots = poly_roots(H.delta);
    std::vector<std::complex<double>> distinct;
    for (auto z : roots) {
        bool seen = false;
        for (auto w : distinct)
            if (std::abs(z - w) < 1e-7) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(z);
    }
    std::sort(distinct.begin(), distinct.end(), [](auto a, auto b) {
        double pa = std::arg(a), pb = std::arg(b);
        if (pa < 0) pa += 2 * M_PI;
        if (pb < 0) pb += 2 * M_PI;
        return pa < pb;
    });
    std::vector<Component> out;
    int n = H.dim();
    for (auto z : distinct) {
        Component c;
        c.z = z;
        c.form.assign(n, std::vector<std::complex<double>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c.form[i][j] = H.G.eval_entry(i, j, z);
        out.push_back(std::move(c));
    }
    return out;
}

// eigenvalues of a complex hermitian matrix by Jacobi rotations on the real
// symmetric doubling [[Re, -Im], [Im, Re]] (each eigenvalue appears twice)
inline std::vector<double> hermitian_eigenvalues(const CMat& A) {
    int n = (int)A.size();
    int m = 2 * n;
    std::vector<std::vector<double>> S(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S[i][j] = A[i][j].real();
            S[n + i][n + j] = A[i][j].real();
            S[i][n + j] = -A[i][j].imag();
            S[n + i][j] = A[i][j].imag();
        }
    double herm = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) herm = std::max(herm, std::abs(S[i][j] - S[j][i]));
    if (herm > 1e-6) throw SignatureError("matrix is not hermitian within tolerance");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q) off += S[p][q] * S[p][q];
        if (off < 1e-24) break;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q) {
                if (std::abs(S[p][q]) < 1e-15) continue;
                double theta = 0.5 * std::atan2(2 * S[p][q], S[q][q] - S[p][p]);
                double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < m; ++k) {
                    double a = S[p][k], b = S[q][k];
                    S[p][k] = c * a - s * b;
                    S[q][k] = s * a + c * b;
                }
                for (int k = 0; k < m; ++k) {
                    double a = S[k][p], b = S[k][q];
                    S[k][p] = c * a - s * b;
                    S[k][q] = s * a + c * b;
                }
            }
    }
    std::vector<double> ev;
    for (int i = 0; i < m; i += 1) ev.push_back(S[i][i]);
    std::sort(ev.begin(), ev.end());
    std::vector<double> half;
    for (int i = 0; i < n; ++i) half.push_back(ev[2 * i]); // each appears twice
    return half;
}

// signature of a component form; throws on eigenvalues inside the tolerance band
inline int component_signature(const Component& c) {
    auto ev = hermitian_eigenvalues(c.form);
    int sig = 0;
    for (double e : ev) {
        if (std::abs(e) < SIG_TOL) throw SignatureError("degenerate component form");
        sig += e > 0 ? 1 : -1;
    }
    return sig;
}

// angular position a in (0,1) with z = exp(2 pi i a)
inline double angle_frac(std::complex<double> z) {
    double a = std::arg(z) / (2 * M_PI);
    if (a < 0) a += 1;
    return a;
}

// weighted signature sum over unit-circle components of the w-twisted action;
// the twist moves an eigenvalue z to w z and keeps the form
inline double lambda_invariant(const HermitianSpace& H, std::complex<double> w = 1.0) {
    if (std::abs(std::abs(w) - 1.0) > 1e-9)
        throw SignatureError("twist parameter must lie on the unit circle");
    double total = 0;
    for (const auto& c : primary_decompose(H)) {
        if (std::abs(std::abs(c.z) - 1.0) > 1e-7) continue; // off the circle
        std::complex<double> z = w * c.z;
        if (std::abs(z - 1.0) < 1e-7) throw NonGenericTwist();
        double a = angle_frac(z);
        int s = component_signature(c);
        total += (2 * a - 1) * s;
    }
    return total;
}

// breakpoint angles (degrees, sorted) where some twisted eigenvalue hits +-1,
// together with 0 and 180 themselves
inline std::vector<double> breakpoint_angles(const HermitianSpace& H) {
    std::vector<double> br = {0.0, 180.0};
    for (const auto& c : primary_decompose(H)) {
        if (std::abs(std::abs(c.z) - 1.0) > 1e-7) continue;
        double th = 360.0 * (1.0 - angle_frac(c.z)); // w z = 1
        br.push_back(std::fmod(th, 360.0));
        br.push_back(std::fmod(th + 180.0, 360.0)); // w z = -1
    }
    std::sort(br.begin(), br.end());
    std::vector<double> out;
    for (double b : br)
        if (out.empty() || b - out.back() > 1e-6) out.push_back(b);
    return out;
}

// difference lambda(H, b) - lambda(twisted by w)
inline double cg_difference(const HermitianSpace& H, std::complex<double> w) {
    return lambda_invariant(H) - lambda_invariant(H, w);
}

struct SignatureProfile {
    std::vector<double> breakpoints;  // degrees, sorted, marked "?"
    std::vector<double> values;       // one per open arc between breakpoints
};

// step table of the difference over the unit circle; each arc is sampled at
// three interior points and required to be constant and near-integral
inline SignatureProfile sweep(const HermitianSpace& H) {
    SignatureProfile P;
    P.breakpoints = breakpoint_angles(H);
    int n = (int)P.breakpoints.size();
    for (int i = 0; i < n; ++i) {
        double a = P.breakpoints[i];
        double b = i + 1 < n ? P.breakpoints[i + 1] : P.breakpoints[0] + 360.0;
        double vals[3];
        for (int k = 0; k < 3; ++k) {
            double th = a + (b - a) * (k + 1) / 4.0;
            std::complex<double> w = std::polar(1.0, th * M_PI / 180.0);
            vals[k] = cg_difference(H, w);
        }
        if (std::abs(vals[0] - vals[1]) > 1e-6 || std::abs(vals[1] - vals[2]) > 1e-6)
            throw SignatureError("difference not constant between breakpoints");
        if (std::abs(2 * vals[1] - std::round(2 * vals[1])) > 1e-6)
            throw SignatureError("difference failed the half-integrality check");
        double v = std::round(2 * vals[1]) / 2.0;
        if (v == 0) v = 0; // normalize -0
        P.values.push_back(v);
    }
    return P;
}

// checks for the difference theorem: a nontrivial character, a generic twist,
// and an order polynomial vanishing at neither the twist conjugate nor at 1
inline void check_difference_preconditions(const HermitianSpace& H, std::complex<double> w,
                                           bool character_trivial) {
    if (character_trivial) throw SignatureError("character must be nontrivial");
    Field F = H.delta.F;
    if (H.delta.eval(FE(F, 1L)).is_zero())
        throw SignatureError("order polynomial vanishes at 1");
    if (std::abs(H.delta.eval_c(std::conj(w))) < 1e-9)
        throw SignatureError("order polynomial vanishes at the twist conjugate");
    double th = std::fmod(std::arg(w) * 180.0 / M_PI + 360.0, 360.0);
    for (double b : breakpoint_angles(H))
        if (std::abs(th - b) < 1e-9 || std::abs(th - b - 360.0) < 1e-9) throw NonGenericTwist();
}

} // namespace kp

#endif
