#pragma once

#include "octdirac/errors.hpp"
#include "octdirac/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace octdirac {

/// Dense row-major matrix over an exact or floating scalar (or any ring
/// type with +, -, * and a zero-initializing default constructor).
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionMismatch("matrix initializer rows have unequal length");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return data_; }

    Matrix& operator+=(const Matrix& other) {
        require_same_shape(other, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& other) {
        require_same_shape(other, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& scalar) {
        for (auto& v : data_) v = v * scalar;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product: " + shape_string(a) + " * " + shape_string(b));
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == T{}) continue;
                    r(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T{})) return false;
        return true;
    }

    /// Row-major flattening, used by the span/nullspace machinery.
    std::vector<T> vectorized() const { return data_; }

private:
    void require_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionMismatch(std::string("matrix ") + op + ": " + shape_string(*this) +
                                    " vs " + shape_string(other));
    }

    static std::string shape_string(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& aij = a(i, j);
            if (aij == T{}) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return r;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    return kron(kron(a, b), c);
}

inline Rational max_abs(const ExactMatrix& m) {
    Rational best = 0;
    for (const auto& v : m.entries()) {
        Rational a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

inline double max_abs(const FloatMatrix& m) {
    double best = 0.0;
    for (double v : m.entries()) {
        double a = v < 0 ? -v : v;
        if (a > best) best = a;
    }
    return best;
}

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = static_cast<double>(m(i, j));
    return r;
}

/// True iff every row and every column carries exactly one nonzero entry and
/// that entry is +1 or -1.
inline bool is_signed_permutation(const ExactMatrix& m) {
    if (!m.is_square()) return false;
    const std::size_t n = m.rows();
    std::vector<int> col_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = m(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

} // namespace octdirac
