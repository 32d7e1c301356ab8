#pragma once

/*
 * Dense matrices over the scalar tower, row-major. Matrix<T> is a general
 * rectangular matrix; HermitianMatrix<T> is a square matrix validated to be
 * conjugate-symmetric at construction (bit-exact for exact domains,
 * symmetrized within tolerance for the float backend).
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "simkern/errors.hpp"
#include "simkern/scalars.hpp"

namespace simkern {

template <ScalarType T>
class Matrix {
public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be >= 1");
    }

    /// Rows given as nested vectors; all rows must have equal length.
    explicit Matrix(const std::vector<std::vector<T>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw ShapeError("matrix dimensions must be >= 1");
        rows_ = rows.size();
        cols_ = rows.front().size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeError("ragged rows in matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    /// A zero/one of the same field as this matrix's entries.
    T zero() const { return zero_like(data_.front()); }
    T one() const { return one_like(data_.front()); }

    /// Largest entry modulus; the context scale for float tolerance tests.
    double float_scale() const {
        if constexpr (std::is_same_v<T, ComplexFloat>) {
            double s = 0.0;
            for (const auto& z : data_) s = std::max(s, z.abs());
            return s;
        } else {
            return 1.0;
        }
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        if (row_idx.empty() || col_idx.empty())
            throw InvalidIndexSet("empty index set");
        Matrix out(row_idx.size(), col_idx.size(), zero());
        for (std::size_t i = 0; i < row_idx.size(); ++i) {
            if (row_idx[i] >= rows_) throw InvalidIndexSet("row index out of range");
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                if (col_idx[j] >= cols_) throw InvalidIndexSet("column index out of range");
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
            }
        }
        return out;
    }

    Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        return submatrix(idx, idx);
    }

    Matrix conj_transpose() const {
        Matrix out(cols_, rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = scalar_conj((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_zero() const {
        double s = float_scale();
        return std::all_of(data_.begin(), data_.end(),
                           [&](const T& x) { return scalar_is_zero(x, s); });
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix out = a;
        for (auto& x : out.data_) x = s * x;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_, a.zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (scalar_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    T trace() const {
        if (!is_square()) throw ShapeError("trace of a non-square matrix");
        T t = zero();
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    static Matrix identity(std::size_t n, const T& one) {
        Matrix out(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
        return out;
    }

    static Matrix ones(std::size_t rows, std::size_t cols, const T& one) {
        return Matrix(rows, cols, one);
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Entrywise n-th power; n = 0 gives the all-ones matrix of the same shape.
template <ScalarType T>
Matrix<T> hadamard_power(const Matrix<T>& a, unsigned long n) {
    Matrix<T> out(a.rows(), a.cols(), a.one());
    if (n == 0) return out;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = pow(a(i, j), n);
    return out;
}

/// Entrywise (Hadamard/Schur) product.
template <ScalarType T>
Matrix<T> hadamard_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("Hadamard product shape mismatch");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
    return out;
}

/// Vertical concatenation; all matrices must have the same column count.
template <ScalarType T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts) {
    if (parts.empty()) throw ShapeError("vstack of an empty list");
    std::size_t cols = parts.front().cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ShapeError("vstack column count mismatch");
        rows += p.rows();
    }
    Matrix<T> out(rows, cols, parts.front().zero());
    std::size_t r = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) out(r, j) = p(i, j);
    }
    return out;
}

/// Block direct sum: diag(parts...), zero off the blocks.
template <ScalarType T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& parts) {
    if (parts.empty()) throw ShapeError("direct sum of an empty list");
    std::size_t n = 0, m = 0;
    for (const auto& p : parts) {
        n += p.rows();
        m += p.cols();
    }
    Matrix<T> out(n, m, parts.front().zero());
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) out(r + i, c + j) = p(i, j);
        r += p.rows();
        c += p.cols();
    }
    return out;
}

/// Square conjugate-symmetric matrix. Exact domains must satisfy
/// a_ij == conj(a_ji) bit-exactly; float input is symmetrized when within
/// tolerance and rejected otherwise.
template <ScalarType T>
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix<T> m) : m_(std::move(m)) {
        if (!m_.is_square()) throw ShapeError("Hermitian matrix must be square");
        const std::size_t n = m_.rows();
        if constexpr (scalar_traits<T>::is_exact) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (m_(i, j) != scalar_conj(m_(j, i)))
                        throw SymmetryError("matrix is not Hermitian at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
        } else {
            double s = m_.float_scale();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    T d = m_(i, j) - scalar_conj(m_(j, i));
                    if (!scalar_is_zero(d, s))
                        throw SymmetryError("matrix is not Hermitian within tolerance at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            // Symmetrize so downstream exact-pattern code sees an exactly
            // Hermitian float matrix.
            ComplexFloat half(0.5);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    T v = half * (m_(i, j) + scalar_conj(m_(j, i)));
                    m_(i, j) = v;
                    m_(j, i) = scalar_conj(v);
                }
                m_(i, i) = T(real_part(m_(i, i)));
            }
        }
    }

    explicit HermitianMatrix(const std::vector<std::vector<T>>& rows)
        : HermitianMatrix(Matrix<T>(rows)) {}

    std::size_t dim() const { return m_.rows(); }
    const Matrix<T>& mat() const { return m_; }
    operator const Matrix<T>&() const { return m_; }  // NOLINT: deliberate view conversion

    const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
        return a.m_ == b.m_;
    }
    friend bool operator!=(const HermitianMatrix& a, const HermitianMatrix& b) {
        return !(a == b);
    }

private:
    Matrix<T> m_;
};

template <ScalarType T>
HermitianMatrix<T> hadamard_power(const HermitianMatrix<T>& a, unsigned long n) {
    return HermitianMatrix<T>(hadamard_power(a.mat(), n));
}

inline Matrix<GaussianRational> to_gaussian(const Matrix<Rational>& a) {
    Matrix<GaussianRational> out(a.rows(), a.cols(), GaussianRational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_gaussian(a(i, j));
    return out;
}

inline HermitianMatrix<GaussianRational> to_gaussian(const HermitianMatrix<Rational>& a) {
    return HermitianMatrix<GaussianRational>(to_gaussian(a.mat()));
}

/// Linearly independent vectors spanning a subspace of the ambient space;
/// an empty list encodes the zero subspace.
template <ScalarType T>
struct KernelBasis {
    std::size_t ambient = 0;
    std::vector<std::vector<T>> vectors;

    std::size_t dimension() const { return vectors.size(); }
    bool is_trivial() const { return vectors.empty(); }
};

/// Inertia triple of a Hermitian matrix: counts of positive, zero and
/// negative eigenvalues.
struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    friend bool operator==(const Signature&, const Signature&) = default;

    std::string to_string() const {
        return "(" + std::to_string(n_plus) + ", " + std::to_string(n_zero) + ", " +
               std::to_string(n_minus) + ")";
    }
};

}  // namespace simkern
