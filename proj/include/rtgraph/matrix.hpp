#ifndef RTGRAPH_MATRIX_HPP
#define RTGRAPH_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rtgraph/errors.hpp"
#include "rtgraph/polynomial.hpp"
#include "rtgraph/rational.hpp"

namespace rtg {

// Dense matrix over Rational. All arithmetic is exact; floating point never
// enters this type. Row-major, 0-based indexing.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatchError("ragged initializer rows");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    // All-ones matrix (J in the resistance-distance inverse route).
    static Matrix ones(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (auto& x : m.a_) x = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatchError("matrix product shape mismatch");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const Rational& c, Matrix m) {
        for (auto& x : m.a_) x *= c;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Rational trace() const {
        require_square("trace");
        Rational t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // Exact determinant. Rows are scaled to integers, then eliminated with
    // the fraction-free (Bareiss) scheme, so intermediate growth stays in
    // minor-determinant range and every division is exact.
    Rational determinant() const {
        require_square("determinant");
        const std::size_t n = rows_;
        if (n == 0) return Rational(1);

        std::vector<mpz_class> w(n * n);
        mpz_class row_scales = 1;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < n; ++j) l = lcm(l, (*this)(i, j).denominator());
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& x = (*this)(i, j);
                w[i * n + j] = x.numerator() * (l / x.denominator());
            }
            row_scales *= l;
        }

        int sign = 1;
        mpz_class prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (w[k * n + k] == 0) {
                std::size_t p = k + 1;
                while (p < n && w[p * n + k] == 0) ++p;
                if (p == n) return Rational(0);
                for (std::size_t j = 0; j < n; ++j) std::swap(w[k * n + j], w[p * n + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    mpz_class t = w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j];
                    mpz_divexact(w[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                w[i * n + k] = 0;
            }
            prev = w[k * n + k];
        }
        mpz_class det = w[n * n - 1];
        if (sign < 0) det = -det;
        return Rational(det, row_scales);
    }

    // Gauss-Jordan inverse, exact.
    Matrix inverse() const {
        require_square("inverse");
        const std::size_t n = rows_;
        Matrix w = *this;
        Matrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t p = col;
            while (p < n && w(p, col).is_zero()) ++p;
            if (p == n) throw SingularMatrixError("matrix is singular");
            if (p != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(w(col, j), w(p, j));
                    std::swap(inv(col, j), inv(p, j));
                }
            }
            const Rational piv = w(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(col, j) /= piv;
                inv(col, j) /= piv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || w(i, col).is_zero()) continue;
                const Rational f = w(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    w(i, j) -= f * w(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    // Monic characteristic polynomial det(xI - M), computed exactly with the
    // Faddeev-LeVerrier recurrence (the trace division at step k is exact).
    // Integer matrices keep the whole recurrence in mpz, which skips the
    // per-operation rational canonicalization.
    Polynomial char_poly(std::string symbol = "mu") const {
        require_square("char_poly");
        const std::size_t n = rows_;
        std::vector<Rational> c(n + 1);
        c[n] = Rational(1);
        if (n == 0) return Polynomial(std::move(c), std::move(symbol));

        bool integral = true;
        for (const auto& x : a_) {
            if (!x.is_integer()) { integral = false; break; }
        }
        if (integral) {
            std::vector<mpz_class> a(n * n), m(n * n), shifted(n * n), ci(n + 1);
            for (std::size_t i = 0; i < n * n; ++i) a[i] = a_[i].numerator();
            m = a;
            for (std::size_t k = 1; k <= n; ++k) {
                if (k > 1) {
                    shifted = m;
                    for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] += ci[n - k + 1];
                    std::fill(m.begin(), m.end(), mpz_class(0));
                    for (std::size_t i = 0; i < n; ++i) {
                        for (std::size_t l = 0; l < n; ++l) {
                            const mpz_class& ail = a[i * n + l];
                            if (ail == 0) continue;
                            for (std::size_t j = 0; j < n; ++j) {
                                mpz_addmul(m[i * n + j].get_mpz_t(), ail.get_mpz_t(),
                                           shifted[l * n + j].get_mpz_t());
                            }
                        }
                    }
                }
                mpz_class tr = 0;
                for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i];
                mpz_class kk = static_cast<long>(k);
                mpz_divexact(ci[n - k].get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
                ci[n - k] = -ci[n - k];
            }
            for (std::size_t k = 0; k < n; ++k) c[k] = Rational(ci[k]);
            return Polynomial(std::move(c), std::move(symbol));
        }

        Matrix m = *this;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k > 1) {
                Matrix shifted = m;
                const Rational& ck = c[n - k + 1];
                for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
                m = (*this) * shifted;
            }
            c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
        }
        return Polynomial(std::move(c), std::move(symbol));
    }

private:
    void require_square(const char* what) const {
        if (!is_square()) throw NotSquareError(std::string(what) + " requires a square matrix");
    }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DimensionMismatchError("matrix shape mismatch");
        }
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Kronecker product: every entry a_ij of A is replaced by the block a_ij * B.
inline Matrix kronecker_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

// [[m1 m2], [m3 m4]]
inline Matrix block_matrix(const Matrix& m1, const Matrix& m2,
                           const Matrix& m3, const Matrix& m4) {
    if (m1.rows() != m2.rows() || m3.rows() != m4.rows() ||
        m1.cols() != m3.cols() || m2.cols() != m4.cols()) {
        throw DimensionMismatchError("non-conformable blocks");
    }
    Matrix out(m1.rows() + m3.rows(), m1.cols() + m2.cols());
    for (std::size_t i = 0; i < m1.rows(); ++i) {
        for (std::size_t j = 0; j < m1.cols(); ++j) out(i, j) = m1(i, j);
        for (std::size_t j = 0; j < m2.cols(); ++j) out(i, m1.cols() + j) = m2(i, j);
    }
    for (std::size_t i = 0; i < m3.rows(); ++i) {
        for (std::size_t j = 0; j < m3.cols(); ++j) out(m1.rows() + i, j) = m3(i, j);
        for (std::size_t j = 0; j < m4.cols(); ++j) out(m1.rows() + i, m1.cols() + j) = m4(i, j);
    }
    return out;
}

// Determinant of [[m1 m2],[m3 m4]] via a Schur complement. Prefers the
// m4-complement, then the m1-complement; if both corner blocks are singular
// it falls back to eliminating the assembled matrix directly.
inline Rational schur_determinant(const Matrix& m1, const Matrix& m2,
                                  const Matrix& m3, const Matrix& m4) {
    if (!m1.is_square() || !m4.is_square() ||
        m2.rows() != m1.rows() || m2.cols() != m4.cols() ||
        m3.rows() != m4.rows() || m3.cols() != m1.cols()) {
        throw DimensionMismatchError("schur blocks are not conformable");
    }
    const Rational d4 = m4.determinant();
    if (!d4.is_zero()) {
        return d4 * (m1 - m2 * m4.inverse() * m3).determinant();
    }
    const Rational d1 = m1.determinant();
    if (!d1.is_zero()) {
        return d1 * (m4 - m3 * m1.inverse() * m2).determinant();
    }
    return block_matrix(m1, m2, m3, m4).determinant();
}

} // namespace rtg

#endif
