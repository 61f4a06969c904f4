// Small dense matrices over a scalar ring.
#pragma once

#include "ga/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ga {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Ring<T>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring<T>::one();
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& v : a.data_) v = T(s * v);
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

namespace detail {
inline bool pivot_better(double cand, double best) { return cand > best; }
}

// Determinant. Exact rings use fraction-free elimination; floats use partial pivoting.
template <class T>
T determinant(Matrix<T> a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Ring<T>::one();
    T sign = Ring<T>::one();
    T prev = Ring<T>::one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        if constexpr (Ring<T>::exact) {
            for (std::size_t i = k; i < n; ++i)
                if (!is_zero(a(i, k))) { p = i; break; }
        } else {
            double best = 0;
            for (std::size_t i = k; i < n; ++i) {
                double m = Ring<T>::magnitude(a(i, k));
                if (m > best) { best = m; p = i; }
            }
        }
        if (p == n) return Ring<T>::zero();
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = T(-sign);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                if constexpr (Ring<T>::exact && !Ring<T>::field) {
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    a(i, j) = v;
                } else {
                    a(i, j) = T(v / prev);
                }
            }
            a(i, k) = Ring<T>::zero();
        }
        prev = a(k, k);
    }
    return T(sign * a(n - 1, n - 1));
}

// Row echelon over a field; returns the rank and leaves `a` reduced.
template <class T>
std::size_t row_reduce(Matrix<T>& a, double tol = 0.0) {
    static_assert(Ring<T>::field, "row reduction needs a field");
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = a.rows();
        double best = tol;
        for (std::size_t i = r; i < a.rows(); ++i) {
            if constexpr (Ring<T>::exact) {
                if (!is_zero(a(i, c))) { p = i; break; }
            } else {
                double m = Ring<T>::magnitude(a(i, c));
                if (m > best) { best = m; p = i; }
            }
        }
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        T inv = Ring<T>::inv(a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = T(a(r, j) * inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= T(f * a(r, j));
        }
        ++r;
    }
    return r;
}

template <class T>
std::size_t rank(Matrix<T> a, double tol = 1e-10) {
    double scale = 0;
    if constexpr (!Ring<T>::exact) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, Ring<T>::magnitude(a(i, j)));
    }
    return row_reduce(a, tol * scale);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Ring<T>::one();
    }
    double scale = 0;
    if constexpr (!Ring<T>::exact) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, Ring<T>::magnitude(a(i, j)));
    }
    std::size_t r = row_reduce(aug, 1e-14 * scale);
    bool ok = r >= n;
    for (std::size_t i = 0; ok && i < n; ++i)
        if (is_zero(aug(i, i))) ok = false;
    if (!ok) throw std::domain_error("singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Solves a x = b for square invertible a.
template <class T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.rows();
    if (!a.square() || b.size() != n) throw std::invalid_argument("solve shape mismatch");
    Matrix<T> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    double scale = 0;
    if constexpr (!Ring<T>::exact) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, Ring<T>::magnitude(a(i, j)));
    }
    row_reduce(aug, 1e-14 * scale);
    for (std::size_t i = 0; i < n; ++i)
        if (is_zero(aug(i, i)) || !(aug(i, i) == Ring<T>::one())) throw std::domain_error("singular");
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

// Text form: rows separated by ';', entries by ','.
Matrix<mpq_class> parse_matrix(const std::string& text);

}  // namespace ga
