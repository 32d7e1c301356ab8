#pragma once

/*
 * Simultaneous kernels of Hadamard powers. "All n >= 0" is operationally
 * truncated at n < N: the first N powers already determine the intersection
 * (the higher powers are linear combinations of them), and verify_t3pmp
 * additionally sweeps n < 2N as a redundancy check.
 */

#include <array>
#include <optional>
#include <vector>

#include "simkern/linalg.hpp"
#include "simkern/partition.hpp"
#include "simkern/strata.hpp"

namespace simkern {

namespace detail {

template <ScalarType T>
T scalar_from_rational(const Rational& q) {
    if constexpr (std::is_same_v<T, Rational>)
        return q;
    else if constexpr (std::is_same_v<T, GaussianRational>)
        return {q, Rational(0)};
    else if constexpr (std::is_same_v<T, ComplexFloat>)
        return ComplexFloat(q.to_double());
    else
        static_assert(!std::is_same_v<T, PrimeFieldElement>,
                      "rational coefficients do not embed into GF(p)");
}

}  // namespace detail

/// Kernel of J_pi, the direct sum of all-ones blocks along the partition:
/// the blockwise sum-zero space, with canonical basis
/// {e_min(I_j) - e_i : i in I_j, i != min(I_j)}. Dimension N - m.
template <ScalarType T = GaussianRational>
KernelBasis<T> ker_block_ones(const Partition& p, const T& exemplar = T(1)) {
    KernelBasis<T> out;
    out.ambient = p.ground_size();
    const T zero = zero_like(exemplar);
    const T one = one_like(exemplar);
    for (const auto& blk : p.blocks()) {
        for (std::size_t k = 1; k < blk.size(); ++k) {
            std::vector<T> v(out.ambient, zero);
            v[blk.front()] = one;
            v[blk[k]] = -one;
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

/// The matrix J_pi itself.
template <ScalarType T = GaussianRational>
Matrix<T> block_ones_matrix(const Partition& p, const T& exemplar = T(1)) {
    const std::size_t n = p.ground_size();
    Matrix<T> j(n, n, zero_like(exemplar));
    const T one = one_like(exemplar);
    for (const auto& blk : p.blocks())
        for (std::size_t s : blk)
            for (std::size_t t : blk) j(s, t) = one;
    return j;
}

/// Hadamard powers A^{o0}, ..., A^{o(bound-1)}.
template <ScalarType T>
std::vector<Matrix<T>> hadamard_power_sweep(const Matrix<T>& a, std::size_t bound) {
    std::vector<Matrix<T>> out;
    out.reserve(bound);
    Matrix<T> current(a.rows(), a.cols(), a.one());
    for (std::size_t n = 0; n < bound; ++n) {
        out.push_back(current);
        if (n + 1 < bound) current = hadamard_product(current, a);
    }
    return out;
}

/// Simultaneous kernel K(A) of all Hadamard powers, computed as the kernel
/// of the stacked powers n = 0..N-1.
template <ScalarType T>
KernelBasis<T> simultaneous_kernel(const HermitianMatrix<T>& a) {
    return stacked_kernel(hadamard_power_sweep(a.mat(), a.dim()));
}

/// Simultaneous kernel of the block-diagonal restrictions
/// diag A^{on}_{pi'} along a partition pi' that must be refined by
/// pi^{1}(A) (the T3pmp hypothesis).
template <ScalarType T>
KernelBasis<T> simultaneous_kernel_blockdiag(const HermitianMatrix<T>& a, const Partition& p) {
    if (p.ground_size() != a.dim()) throw ShapeError("partition size does not match matrix");
    Partition pi1 = pi_min(a, GroupSpec::trivial());
    if (!is_refinement(pi1, p))
        throw RefinementHypothesisFailed(
            "pi^{1}(A) does not refine the supplied partition; the block-diagonal kernel "
            "theorem does not apply");
    const std::size_t n = a.dim();
    std::vector<Matrix<T>> stack;
    stack.reserve(n);
    for (const Matrix<T>& power : hadamard_power_sweep(a.mat(), n)) {
        Matrix<T> blockdiag(n, n, a.mat().zero());
        for (const auto& blk : p.blocks())
            for (std::size_t s : blk)
                for (std::size_t t : blk) blockdiag(s, t) = power(s, t);
        stack.push_back(std::move(blockdiag));
    }
    return kernel_basis(vstack(stack));
}

/// Kernel of sum_j c_j A^{oj} for strictly positive rational coefficients
/// c_0..c_{N-1}; equal to the simultaneous kernel for every such c when A
/// is positive semidefinite.
template <ScalarType T>
KernelBasis<T> positive_combination_kernel(const HermitianMatrix<T>& a,
                                           const std::vector<Rational>& coeff) {
    const std::size_t n = a.dim();
    if (coeff.size() != n)
        throw InvalidCoefficients("expected exactly N coefficients");
    for (const auto& c : coeff)
        if (!(c > Rational(0)))
            throw InvalidCoefficients("coefficients must be strictly positive");
    Matrix<T> combo(n, n, a.mat().zero());
    std::size_t j = 0;
    for (const Matrix<T>& power : hadamard_power_sweep(a.mat(), n)) {
        combo = combo + detail::scalar_from_rational<T>(coeff[j]) * power;
        ++j;
    }
    return kernel_basis(combo);
}

/// Result of the rectangular any-field recipe: the coarsest column
/// partition on which every row is constant, the simultaneous kernel, and
/// whether the kernel coincides with the blockwise sum-zero space of that
/// partition (true generically, not always).
template <ScalarType T>
struct RectangularKernel {
    Partition column_partition;
    KernelBasis<T> kernel;
    bool equals_block_sum_zero = false;
};

/// Simultaneous kernel of the Hadamard powers of an arbitrary rectangular
/// matrix over any field, by reduction to rows: a vector is annihilated by
/// every Hadamard power of a row u exactly when its sums over the
/// equal-value classes of u all vanish (the first k powers of the k
/// distinct values form a Vandermonde system), so the kernel is the kernel
/// of the stacked class-indicator rows. The blockwise sum-zero space of the
/// coarsest common column partition is always contained in this kernel but
/// can be strictly smaller when distinct column blocks have coordinated
/// values in every row; the report flags whether the two coincide.
template <ScalarType T>
RectangularKernel<T> rectangular_simultaneous_kernel(const Matrix<T>& m) {
    const std::size_t cols = m.cols();
    const T zero = m.zero();
    const T one = m.one();
    // per-row equal-value classes, stacked as indicator rows
    std::vector<std::vector<T>> indicator_rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t c = 0; c < cols; ++c) {
            bool placed = false;
            for (auto& cls : classes)
                if (m(r, c) == m(r, cls.front())) {
                    cls.push_back(c);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({c});
        }
        for (const auto& cls : classes) {
            std::vector<T> row(cols, zero);
            for (std::size_t c : cls) row[c] = one;
            indicator_rows.push_back(std::move(row));
        }
    }
    KernelBasis<T> kernel = kernel_basis(matrix_from_rows(cols, indicator_rows, zero));

    // coarsest partition on which every row is constant = equal columns
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < cols; ++c) {
        bool placed = false;
        for (auto& grp : groups) {
            const std::size_t rep = grp.front();
            bool equal = true;
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (m(r, c) != m(r, rep)) {
                    equal = false;
                    break;
                }
            if (equal) {
                grp.push_back(c);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({c});
    }
    Partition p(cols, std::move(groups));
    bool block_form = subspace_equal(kernel, ker_block_ones<T>(p, one));
    return {std::move(p), std::move(kernel), block_form};
}

template <ScalarType T>
struct DistinctDiagonalReport {
    /// a_ii != a_ij for all 1 <= i < j <= N.
    bool hypothesis_holds = false;
    KernelBasis<T> kernel;
};

/// Checks the distinct-diagonal hypothesis and computes the truncated
/// simultaneous kernel; when the hypothesis holds the kernel is asserted
/// to be trivial (a failure would contradict the theorem).
template <ScalarType T>
DistinctDiagonalReport<T> distinct_diagonal_check(const Matrix<T>& m) {
    if (!m.is_square()) throw ShapeError("distinct-diagonal check needs a square matrix");
    const std::size_t n = m.rows();
    bool hypothesis = true;
    for (std::size_t i = 0; i < n && hypothesis; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, i) == m(i, j)) {
                hypothesis = false;
                break;
            }
    KernelBasis<T> kernel = stacked_kernel(hadamard_power_sweep(m, n));
    if (hypothesis && !kernel.is_trivial())
        throw VerificationFailed(
            "distinct-diagonal matrix with nontrivial truncated simultaneous kernel");
    return {hypothesis, std::move(kernel)};
}

/// The four kernel spaces of the T3pmp theorem and their pairwise equality
/// table: (1) powers n < N, (2) powers n < 2N, (3) block-diagonal variant
/// along a one-step coarsening of pi, (4) ker J_pi.
template <ScalarType T>
struct T3pmpReport {
    Partition pi;                       // pi^{1}(A)
    bool input_is_3pmp = false;
    std::array<KernelBasis<T>, 4> spaces;
    std::array<std::array<bool, 4>, 4> equal{};
    bool all_equal = false;
};

template <ScalarType T>
T3pmpReport<T> verify_t3pmp(const HermitianMatrix<T>& a) {
    const std::size_t n = a.dim();
    Partition pi = pi_min(a, GroupSpec::trivial());
    // One-step coarsening of pi when available, else pi itself (T3pmp allows
    // any partition refined by pi).
    Partition coarser = pi;
    if (pi.num_blocks() >= 2) {
        std::vector<std::vector<std::size_t>> blocks;
        std::vector<std::size_t> merged = pi.block(0);
        merged.insert(merged.end(), pi.block(1).begin(), pi.block(1).end());
        blocks.push_back(std::move(merged));
        for (std::size_t j = 2; j < pi.num_blocks(); ++j) blocks.push_back(pi.block(j));
        coarser = Partition(n, std::move(blocks));
    }
    T3pmpReport<T> report{
        .pi = pi,
        .input_is_3pmp = is_k_pmp(a, std::min<std::size_t>(3, n)).holds,
        .spaces = {stacked_kernel(hadamard_power_sweep(a.mat(), n)),
                   stacked_kernel(hadamard_power_sweep(a.mat(), 2 * n)),
                   simultaneous_kernel_blockdiag(a, coarser),
                   ker_block_ones<T>(pi, a.mat().one())},
        .equal = {},
        .all_equal = true,
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            report.equal[i][j] = subspace_equal(report.spaces[i], report.spaces[j]);
            if (!report.equal[i][j]) report.all_equal = false;
        }
    return report;
}

}  // namespace simkern
