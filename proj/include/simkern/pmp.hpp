#pragma once

/*
 * Principal-minor positivity (k-PMP), the principal submatrix rank property
 * (k-PSRP), and the signature constraints that k-PMP-but-not-(k+1)-PMP
 * imposes. Minor enumeration is lexicographic by index set, so "first
 * violation" witnesses are deterministic. Sizes 1-3 use closed forms; larger
 * minors go through fraction-free elimination.
 */

#include <optional>
#include <vector>

#include "simkern/linalg.hpp"

namespace simkern {

namespace detail {

/// Visits all k-subsets of {0..n-1} in lexicographic order until fn returns
/// true; returns the subset that stopped the scan.
template <typename Fn>
std::optional<std::vector<std::size_t>> first_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k == 0 || k > n) return std::nullopt;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return idx;
        // advance to the next k-subset
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return std::nullopt;
        }
    }
}

/// Sign of the principal minor on `idx`, with closed forms for sizes 1-3.
template <ScalarType T>
int principal_minor_sign(const HermitianMatrix<T>& a, const std::vector<std::size_t>& idx,
                         double scale) {
    const std::size_t k = idx.size();
    if (k == 1) return sign_of_real(a(idx[0], idx[0]), scale);
    if (k == 2) {
        const std::size_t i = idx[0], j = idx[1];
        T det = a(i, i) * a(j, j) - a(i, j) * a(j, i);
        return sign_of_real(det, scale);
    }
    if (k == 3) {
        const std::size_t i = idx[0], j = idx[1], l = idx[2];
        T det = a(i, i) * (a(j, j) * a(l, l) - a(j, l) * a(l, j)) -
                a(i, j) * (a(j, i) * a(l, l) - a(j, l) * a(l, i)) +
                a(i, l) * (a(j, i) * a(l, j) - a(j, j) * a(l, i));
        return sign_of_real(det, scale);
    }
    return sign_of_real(principal_minor(a, idx), scale);
}

}  // namespace detail

template <ScalarType T>
struct PmpVerdict {
    bool holds = true;
    /// Lexicographically first index set (0-based) whose minor violates the
    /// property, when holds is false.
    std::optional<std::vector<std::size_t>> witness;
};

/// First principal index set of exactly size j with negative minor, in
/// lexicographic order, if any.
template <ScalarType T>
std::optional<std::vector<std::size_t>> first_negative_minor(const HermitianMatrix<T>& a,
                                                             std::size_t j) {
    const double scale = a.mat().float_scale();
    return detail::first_subset(a.dim(), j, [&](const std::vector<std::size_t>& idx) {
        return detail::principal_minor_sign(a, idx, scale) < 0;
    });
}

/// True iff every principal minor of size <= k is non-negative. Over the
/// float domain, minors within tolerance of zero count as non-negative
/// (PMP is a closed condition; the tolerance is one-sided).
template <ScalarType T>
PmpVerdict<T> is_k_pmp(const HermitianMatrix<T>& a, std::size_t k) {
    if (k < 1 || k > a.dim()) throw InvalidOrder("k-PMP order must be in [1, N]");
    for (std::size_t j = 1; j <= k; ++j) {
        if (auto w = first_negative_minor(a, j)) return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

/// Maximal k such that A is k-PMP; 0 when some diagonal entry is negative,
/// N when A is positive semidefinite.
template <ScalarType T>
std::size_t pmp_order(const HermitianMatrix<T>& a) {
    for (std::size_t j = 1; j <= a.dim(); ++j)
        if (first_negative_minor(a, j)) return j - 1;
    return a.dim();
}

/// k-PSRP: for every index set S of size k, the column space of the rows S
/// equals the column space of A[S,S], and the row space of the columns S
/// equals the row space of A[S,S]. Since col(A[S,S]) is always contained in
/// col(A[S,:]), rank equality certifies space equality.
template <ScalarType T>
PmpVerdict<T> is_k_psrp(const HermitianMatrix<T>& a, std::size_t k) {
    const std::size_t n = a.dim();
    if (k < 1 || k > n) throw InvalidOrder("k-PSRP order must be in [1, N]");
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    auto w = detail::first_subset(n, k, [&](const std::vector<std::size_t>& s) {
        const std::size_t r_principal = rank(a.mat().principal_submatrix(s));
        if (rank(a.mat().submatrix(s, all)) != r_principal) return true;
        return rank(a.mat().submatrix(all, s)) != r_principal;
    });
    if (w) return {false, std::move(w)};
    return {true, std::nullopt};
}

struct PmpSignatureReport {
    std::size_t k = 0;  // pmp_order of the input
    Signature sig;
    /// n_plus >= k and n_minus >= 1; false would indicate an implementation
    /// bug, never a valid input state.
    bool consistent = false;
};

/// Signature consequences for a matrix that is k-PMP but not (k+1)-PMP.
/// PSD input is out of the theorem's hypotheses and raises NotApplicable.
template <ScalarType T>
PmpSignatureReport check_pmp_signature(const HermitianMatrix<T>& a) {
    const std::size_t k = pmp_order(a);
    if (k == a.dim())
        throw NotApplicable("matrix is positive semidefinite; no (k+1)-PMP violation exists");
    Signature s = signature(a);
    return {k, s, s.n_plus >= k && s.n_minus >= 1};
}

}  // namespace simkern
