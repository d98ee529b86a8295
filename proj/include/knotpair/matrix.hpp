#ifndef KNOTPAIR_MATRIX_HPP
#define KNOTPAIR_MATRIX_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace kp {

// Dense matrix over any ring element type with +, -, *, is_zero(). Entries are
// not default-constructed: a zero exemplar is threaded through every factory.
template <class T>
struct Matrix {
    int n = 0, m = 0;
    std::vector<T> e; // row-major

    Matrix() = default;
    Matrix(int rows, int cols, const T& zero) : n(rows), m(cols), e((size_t)rows * cols, zero) {}

    T& at(int i, int j) { return e[(size_t)i * m + j]; }
    const T& at(int i, int j) const { return e[(size_t)i * m + j]; }

    static Matrix identity(int k, const T& zero, const T& one) {
        Matrix r(k, k, zero);
        for (int i = 0; i < k; ++i) r.at(i, i) = one;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] + b.e[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] - b.e[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.m != b.n) throw std::domain_error("matrix shape mismatch");
        Matrix r(a.n, b.m, a.e.empty() ? b.e.at(0) : a.e[0]);
        for (auto& x : r.e) x = x - x; // zero of the ring
        for (int i = 0; i < a.n; ++i)
            for (int k = 0; k < a.m; ++k) {
                const T& f = a.at(i, k);
                if (f.is_zero()) continue;
                for (int j = 0; j < b.m; ++j) r.at(i, j) = r.at(i, j) + f * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& b) {
        Matrix r = b;
        for (auto& x : r.e) x = s * x;
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e) x = -x;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> r;
        r.reserve(n);
        for (int i = 0; i < n; ++i) {
            T acc = at(i, 0) * v[0];
            for (int j = 1; j < m; ++j) acc = acc + at(i, j) * v[j];
            r.push_back(acc);
        }
        return r;
    }

    // Gauss-Jordan inverse; T::inv() may throw (zero divisor, singular)
    Matrix inverse() const {
        if (n != m) throw std::domain_error("inverse of non-square matrix");
        Matrix a = *this;
        T zero = e[0] - e[0];
        T one = zero;
        Matrix id(n, n, zero);
        bool have_one = false;
        for (int i = 0; i < n && !have_one; ++i)
            for (int j = 0; j < n; ++j)
                if (!at(i, j).is_zero()) {
                    one = at(i, j) * at(i, j).inv();
                    have_one = true;
                    break;
                }
        if (!have_one) throw std::domain_error("inverse of zero matrix");
        for (int i = 0; i < n; ++i) id.at(i, i) = one;
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!a.at(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) throw std::domain_error("singular matrix");
            if (p != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(a.at(p, j), a.at(c, j));
                    std::swap(id.at(p, j), id.at(c, j));
                }
            T pi = a.at(c, c).inv();
            for (int j = 0; j < n; ++j) {
                a.at(c, j) = pi * a.at(c, j);
                id.at(c, j) = pi * id.at(c, j);
            }
            for (int r = 0; r < n; ++r) {
                if (r == c || a.at(r, c).is_zero()) continue;
                T f = a.at(r, c);
                for (int j = 0; j < n; ++j) {
                    a.at(r, j) = a.at(r, j) - f * a.at(c, j);
                    id.at(r, j) = id.at(r, j) - f * id.at(c, j);
                }
            }
        }
        return id;
    }

    // determinant by Gaussian elimination (T a field element type)
    T det() const {
        if (n != m) throw std::domain_error("determinant of non-square matrix");
        Matrix a = *this;
        T zero = e[0] - e[0];
        T acc = zero;
        bool neg = false;
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!a.at(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return zero;
            if (p != c) {
                neg = !neg;
                for (int j = c; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            }
            T pivot = a.at(c, c);
            acc = (c == 0) ? pivot : acc * pivot;
            T pi = pivot.inv();
            for (int r = c + 1; r < n; ++r) {
                if (a.at(r, c).is_zero()) continue;
                T f = a.at(r, c) * pi;
                for (int j = c; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(c, j);
            }
        }
        return neg ? -acc : acc;
    }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix r((int)rows.size(), (int)cols.size(), e.at(0));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r.at((int)i, (int)j) = at(rows[i], cols[j]);
        return r;
    }
};

} // namespace kp

#endif
