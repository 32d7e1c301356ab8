#pragma once

/*
 * Exact linear algebra over the scalar tower: fraction-free determinants,
 * reduced row echelon form, rank/kernel, subspace comparison, and matrix
 * inertia via the exact characteristic polynomial (Faddeev-LeVerrier +
 * Descartes sign counting, valid because Hermitian matrices are real-rooted).
 * The float backend replaces the exact steps with tolerance-thresholded
 * pivoting and a complex Jacobi eigensolver.
 */

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "simkern/matrix.hpp"

namespace simkern {

// ---------------------------------------------------------------------------
// Echelon form, rank, kernel
// ---------------------------------------------------------------------------

template <ScalarType T>
struct RrefResult {
    Matrix<T> mat;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form. Exact domains pick the first nonzero pivot
/// (the RREF itself is unique, so pivot order does not matter); the float
/// backend pivots on the largest modulus and thresholds against the
/// context scale of the input.
template <ScalarType T>
RrefResult<T> rref(Matrix<T> m) {
    const std::size_t n_rows = m.rows();
    const std::size_t n_cols = m.cols();
    const double scale = m.float_scale();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
        std::size_t sel = n_rows;
        if constexpr (scalar_traits<T>::is_exact) {
            for (std::size_t r = row; r < n_rows; ++r)
                if (!scalar_is_zero(m(r, col))) {
                    sel = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (std::size_t r = row; r < n_rows; ++r) {
                double a = m(r, col).abs();
                if (a > best) {
                    best = a;
                    sel = r;
                }
            }
            if (sel < n_rows && scalar_is_zero(m(sel, col), scale)) sel = n_rows;
        }
        if (sel == n_rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < n_cols; ++j) std::swap(m(row, j), m(sel, j));
        const T pivot = m(row, col);
        m(row, col) = m.one();
        for (std::size_t j = col + 1; j < n_cols; ++j) m(row, j) /= pivot;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == row) continue;
            const T factor = m(r, col);
            if (scalar_is_zero(factor, scale)) {
                m(r, col) = m.zero();
                continue;
            }
            m(r, col) = m.zero();
            for (std::size_t j = col + 1; j < n_cols; ++j) m(r, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <ScalarType T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).rank();
}

/// Canonical nullspace basis from the RREF: one vector per free column f,
/// with a 1 in position f and -RREF[r][f] in each pivot position. Vectors
/// are ordered by free column, which makes the basis deterministic.
template <ScalarType T>
KernelBasis<T> kernel_basis(const Matrix<T>& m) {
    RrefResult<T> e = rref(m);
    const std::size_t n_cols = m.cols();
    KernelBasis<T> out;
    out.ambient = n_cols;
    std::vector<bool> is_pivot(n_cols, false);
    for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
    for (std::size_t f = 0; f < n_cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(n_cols, m.zero());
        v[f] = m.one();
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.mat(r, f);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

template <ScalarType T>
std::size_t rank(const HermitianMatrix<T>& m) {
    return rank(m.mat());
}

template <ScalarType T>
KernelBasis<T> kernel_basis(const HermitianMatrix<T>& m) {
    return kernel_basis(m.mat());
}

template <ScalarType T>
Matrix<T> matrix_from_rows(std::size_t ambient, const std::vector<std::vector<T>>& rows_in,
                           const T& zero) {
    if (rows_in.empty()) return Matrix<T>(1, ambient == 0 ? 1 : ambient, zero);
    Matrix<T> m(rows_in.size(), ambient, zero);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        if (rows_in[i].size() != ambient) throw ShapeError("vector length mismatch");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
}

template <ScalarType T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v) {
    if (v.size() != a.cols()) throw ShapeError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

/// Basis of the intersection of the kernels, via the kernel of the
/// vertically stacked matrix.
template <ScalarType T>
KernelBasis<T> stacked_kernel(const std::vector<Matrix<T>>& mats) {
    if (mats.empty()) throw ShapeError("stacked kernel of an empty list");
    return kernel_basis(vstack(mats));
}

/// True iff the two bases span the same subspace (mutual containment by
/// rank tests, with a dimension-first short-circuit).
template <ScalarType T>
bool subspace_equal(const KernelBasis<T>& a, const KernelBasis<T>& b) {
    if (a.ambient != b.ambient) throw ShapeError("subspace ambient dimension mismatch");
    if (a.dimension() != b.dimension()) return false;
    if (a.dimension() == 0) return true;
    const T zero = zero_like(a.vectors.front().front());
    std::vector<std::vector<T>> all = a.vectors;
    all.insert(all.end(), b.vectors.begin(), b.vectors.end());
    Matrix<T> stacked = matrix_from_rows(a.ambient, all, zero);
    std::size_t r = rank(stacked);
    return r == a.dimension() && r == rank(matrix_from_rows(a.ambient, a.vectors, zero));
}

/// True iff span(a) is contained in span(b).
template <ScalarType T>
bool subspace_contained(const KernelBasis<T>& a, const KernelBasis<T>& b) {
    if (a.ambient != b.ambient) throw ShapeError("subspace ambient dimension mismatch");
    if (a.dimension() == 0) return true;
    if (b.dimension() == 0) return false;
    const T zero = zero_like(a.vectors.front().front());
    std::vector<std::vector<T>> all = b.vectors;
    all.insert(all.end(), a.vectors.begin(), a.vectors.end());
    return rank(matrix_from_rows(a.ambient, all, zero)) ==
           rank(matrix_from_rows(b.ambient, b.vectors, zero));
}

// ---------------------------------------------------------------------------
// Determinants and principal minors
// ---------------------------------------------------------------------------

namespace detail {

/// Fraction-free Bareiss elimination. Intermediate entries are minors of the
/// input, which keeps rational/Gaussian-rational coefficient growth bounded;
/// every interior division is exact.
template <ScalarType T>
T determinant_bareiss(Matrix<T> m) {
    const std::size_t n = m.rows();
    T prev = m.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (scalar_is_zero(m(k, k))) {
            std::size_t sel = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!scalar_is_zero(m(r, k))) {
                    sel = r;
                    break;
                }
            if (sel == n) return m.zero();
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(sel, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Determinant by LU with partial pivoting; float backend only.
inline ComplexFloat determinant_lu(Matrix<ComplexFloat> m) {
    const std::size_t n = m.rows();
    const double scale = m.float_scale();
    ComplexFloat det(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = k;
        double best = m(k, k).abs();
        for (std::size_t r = k + 1; r < n; ++r) {
            double a = m(r, k).abs();
            if (a > best) {
                best = a;
                sel = r;
            }
        }
        if (scalar_is_zero(m(sel, k), scale)) return ComplexFloat(0.0);
        if (sel != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(sel, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            ComplexFloat f = m(r, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace detail

template <ScalarType T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    if constexpr (scalar_traits<T>::is_exact) {
        return detail::determinant_bareiss(m);
    } else {
        return detail::determinant_lu(m);
    }
}

/// Validates and 0-normalizes an index set: nonempty, in range, duplicates
/// rejected; returns it sorted.
inline std::vector<std::size_t> checked_index_set(std::vector<std::size_t> idx, std::size_t n) {
    if (idx.empty()) throw InvalidIndexSet("empty index set");
    std::sort(idx.begin(), idx.end());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= n) throw InvalidIndexSet("index out of range");
        if (k > 0 && idx[k] == idx[k - 1]) throw InvalidIndexSet("repeated index");
    }
    return idx;
}

/// Determinant of the principal submatrix on rows and columns `idx`
/// (0-based). Real for Hermitian input; for exact complex domains the
/// vanishing of the imaginary part is verified.
template <ScalarType T>
T principal_minor(const HermitianMatrix<T>& a, const std::vector<std::size_t>& idx) {
    auto s = checked_index_set(idx, a.dim());
    T det = determinant(a.mat().principal_submatrix(s));
    if constexpr (std::is_same_v<T, GaussianRational>) {
        if (!det.is_real())
            throw VerificationFailed("principal minor of a Hermitian matrix must be real");
    }
    return det;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and inertia
// ---------------------------------------------------------------------------

/// Coefficients (c_0 = 1, c_1, ..., c_N) of det(xI - A) = sum c_k x^{N-k},
/// computed exactly by the Faddeev-LeVerrier recurrence.
template <ScalarType T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
    static_assert(scalar_traits<T>::is_exact && !std::is_same_v<T, PrimeFieldElement>,
                  "exact characteristic-0 domains only");
    if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<T> coeff(n + 1, a.zero());
    coeff[0] = a.one();
    Matrix<T> m = Matrix<T>::identity(n, a.one());
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<T> am = a * m;
        T ck = -(am.trace() / T(static_cast<int>(k)));
        coeff[k] = ck;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return coeff;
}

namespace detail {

inline std::size_t descartes_variations(const std::vector<Rational>& coeff) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : coeff) {
        int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

inline Signature signature_from_real_rooted(const std::vector<Rational>& coeff) {
    const std::size_t n = coeff.size() - 1;
    std::size_t n_zero = 0;
    while (n_zero < n && coeff[n - n_zero].is_zero()) ++n_zero;
    const std::size_t d = n - n_zero;
    std::vector<Rational> q(coeff.begin(), coeff.begin() + static_cast<std::ptrdiff_t>(d) + 1);
    std::size_t n_plus = descartes_variations(q);
    std::vector<Rational> q_neg = q;
    for (std::size_t j = 0; j <= d; ++j)
        if ((d - j) % 2 == 1) q_neg[j] = -q_neg[j];
    std::size_t n_minus = descartes_variations(q_neg);
    if (n_plus + n_minus != d)
        throw VerificationFailed("Descartes counts inconsistent with a real-rooted polynomial");
    return {n_plus, n_zero, n_minus};
}

/// Eigenvalues of a Hermitian float matrix via cyclic complex Jacobi sweeps.
inline std::vector<double> jacobi_eigenvalues(Matrix<ComplexFloat> b) {
    const std::size_t n = b.rows();
    const double scale = std::max(1.0, b.float_scale());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, b(p, q).abs());
        if (off <= 1e-13 * scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = b(p, q).abs();
                if (r <= 1e-14 * scale) continue;
                const std::complex<double> z = b(p, q).raw();
                const std::complex<double> phase = z / r;  // e^{i theta}
                const double app = b(p, p).re();
                const double aqq = b(q, q).re();
                const double phi = 0.5 * std::atan2(2.0 * r, aqq - app);
                const double c = std::cos(phi);
                const double s = std::sin(phi);
                // B <- U* B U with U = [[c, s e^{i theta}], [-s e^{-i theta}, c]]
                for (std::size_t t = 0; t < n; ++t) {
                    std::complex<double> btp = b(t, p).raw();
                    std::complex<double> btq = b(t, q).raw();
                    b(t, p) = ComplexFloat(c * btp - s * std::conj(phase) * btq);
                    b(t, q) = ComplexFloat(s * phase * btp + c * btq);
                }
                for (std::size_t t = 0; t < n; ++t) {
                    std::complex<double> bpt = b(p, t).raw();
                    std::complex<double> bqt = b(q, t).raw();
                    b(p, t) = ComplexFloat(c * bpt - s * phase * bqt);
                    b(q, t) = ComplexFloat(s * std::conj(phase) * bpt + c * bqt);
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = b(i, i).re();
    return eig;
}

}  // namespace detail

/// Inertia of a Hermitian matrix. Exact domains: characteristic polynomial
/// + Descartes sign-variation counting (exact because the polynomial is
/// real-rooted). Float: Jacobi eigenvalue counts thresholded at the context
/// tolerance.
template <ScalarType T>
Signature signature(const HermitianMatrix<T>& a) {
    if constexpr (std::is_same_v<T, ComplexFloat>) {
        std::vector<double> eig = detail::jacobi_eigenvalues(a.mat());
        const double thr = float_policy().tau * std::max(1.0, a.mat().float_scale());
        Signature s;
        for (double x : eig) {
            if (x > thr)
                ++s.n_plus;
            else if (x < -thr)
                ++s.n_minus;
            else
                ++s.n_zero;
        }
        return s;
    } else if constexpr (std::is_same_v<T, Rational>) {
        return detail::signature_from_real_rooted(characteristic_polynomial(a.mat()));
    } else if constexpr (std::is_same_v<T, GaussianRational>) {
        std::vector<GaussianRational> coeff = characteristic_polynomial(a.mat());
        std::vector<Rational> real_coeff;
        real_coeff.reserve(coeff.size());
        for (const auto& c : coeff) {
            if (!c.is_real())
                throw VerificationFailed("Hermitian characteristic polynomial must be real");
            real_coeff.push_back(c.re());
        }
        return detail::signature_from_real_rooted(real_coeff);
    } else {
        static_assert(!std::is_same_v<T, PrimeFieldElement>, "inertia is undefined over GF(p)");
    }
}

template <ScalarType T>
bool is_psd(const HermitianMatrix<T>& a) {
    return signature(a).n_minus == 0;
}

/// Inverse of a square matrix over an exact field (Gauss-Jordan on [M | I]).
template <ScalarType T>
Matrix<T> inverse(const Matrix<T>& m) {
    static_assert(scalar_traits<T>::is_exact, "exact domains only");
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n, m.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.one();
    }
    RrefResult<T> e = rref(std::move(aug));
    if (e.rank() != n || e.pivot_cols.back() != n - 1)
        throw ShapeError("matrix is singular");
    Matrix<T> out(n, n, m.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.mat(i, n + j);
    return out;
}

}  // namespace simkern
