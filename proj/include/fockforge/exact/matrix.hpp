#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockforge/exact/rational_function.hpp"
#include "fockforge/exact/upoly.hpp"

namespace fockforge::exact {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_zero(const UPoly& x) { return x.is_zero(); }
inline bool is_zero(const Poly& x) { return x.is_zero(); }

/// Pivot preference for elimination: smaller is cheaper.
inline std::size_t pivot_cost(const Rational&) { return 0; }
inline std::size_t pivot_cost(const RationalFunction& x) {
    return x.numerator().size() + x.denominator().size();
}

class SingularMatrix : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!exact::is_zero(x)) return false;
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (exact::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!exact::is_zero(b(k, j))) out(i, j) += x * b(k, j);
                }
            }
        }
        return out;
    }
    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = x * s;
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduced row echelon form over a field. Returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (is_zero(m(r, col))) continue;
            if (!best || pivot_cost(m(r, col)) < pivot_cost(m(*best, col))) best = r;
        }
        if (!best) continue;
        if (*best != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*best, c));
        }
        T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            T f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return row_reduce(m).size();
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("inverse: singular matrix");
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t r = col; r < n; ++r) {
            if (is_zero(m(r, col))) continue;
            if (!best || pivot_cost(m(r, col)) < pivot_cost(m(*best, col))) best = r;
        }
        if (!best) return T(0);
        if (*best != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(*best, c));
            det = -det;
        }
        det = det * m(col, col);
        T inv = T(1) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m(r, col))) continue;
            T f = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) {
                if (!is_zero(m(col, c))) m(r, c) -= f * m(col, c);
            }
        }
    }
    return det;
}

/// Basis of the right null space, one column per basis vector.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix<T> out(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        out(free_cols[k], k) = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -m(i, free_cols[k]);
    }
    return out;
}

}  // namespace fockforge::exact
