#pragma once

/*
 * Schubert cell-type stratification machinery: the coarsest partition
 * pi_min(A, G) making every block submatrix single-G-orbit, the stratum
 * partition (maximal rank-one diagonal blocks), rank-one certificates with
 * the compression matrix C, and the Hershkowitz-Neumann-Schneider
 * decomposition of 3-PMP matrices with entries of modulus 0 or 1.
 *
 * pi_min is computed by a forced-split refinement fixpoint, DFA-minimization
 * style: a block pair whose entries straddle several orbits forces a split
 * that every valid partition must also make, so the fixpoint is the unique
 * coarsest valid partition regardless of split order.
 */

#include <optional>
#include <utility>
#include <vector>

#include "simkern/groups.hpp"
#include "simkern/linalg.hpp"
#include "simkern/partition.hpp"
#include "simkern/pmp.hpp"

namespace simkern {

namespace detail {

/// Groups `items` into orbit-equivalence classes of value(item), preserving
/// first-occurrence order.
template <typename T, typename ValueFn>
std::vector<std::vector<std::size_t>> orbit_classes(const std::vector<std::size_t>& items,
                                                    const GroupSpec& g, ValueFn&& value) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<T> reps;
    for (std::size_t item : items) {
        T v = value(item);
        bool placed = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (orbit_equivalent(v, reps[c], g)) {
                classes[c].push_back(item);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({item});
            reps.push_back(std::move(v));
        }
    }
    return classes;
}

}  // namespace detail

/// The coarsest partition {I_1..I_m} of the index set such that every block
/// submatrix A_{I_i x I_j} has all entries in a single G-orbit. Unique by
/// the meet-closure argument; the result is independent of split order.
template <ScalarType T>
Partition pi_min(const HermitianMatrix<T>& a, const GroupSpec& g) {
    const std::size_t n = a.dim();
    std::vector<std::vector<std::size_t>> blocks;
    {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), std::size_t{0});
        blocks.push_back(std::move(all));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t bi = 0; bi < blocks.size() && !changed; ++bi) {
            for (std::size_t ci = 0; ci < blocks.size() && !changed; ++ci) {
                const std::vector<std::size_t> rows = blocks[bi];
                const std::vector<std::size_t> cols = blocks[ci];
                // A row whose entries against `cols` straddle orbits forces a
                // split of the column block.
                for (std::size_t r : rows) {
                    auto classes = detail::orbit_classes<T>(
                        cols, g, [&](std::size_t c) { return a(r, c); });
                    if (classes.size() > 1) {
                        blocks[ci] = std::move(classes.front());
                        for (std::size_t c = 1; c < classes.size(); ++c)
                            blocks.push_back(std::move(classes[c]));
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
                // Every row is orbit-constant against `cols`; rows whose
                // constants lie in different orbits must be separated.
                auto row_classes = detail::orbit_classes<T>(
                    rows, g, [&](std::size_t r) { return a(r, cols.front()); });
                if (row_classes.size() > 1) {
                    blocks[bi] = std::move(row_classes.front());
                    for (std::size_t c = 1; c < row_classes.size(); ++c)
                        blocks.push_back(std::move(row_classes[c]));
                    changed = true;
                }
            }
        }
    }
    return {n, std::move(blocks)};
}

inline Partition pi_min(const HermitianMatrix<Rational>& a, const GroupSpec& g) {
    return pi_min(to_gaussian(a), g);
}

namespace detail {

/// Exact factorization of a Hermitian block M as c * w w^* with c real > 0
/// and w normalized so its first nonzero entry is 1 (which sits at the first
/// nonzero diagonal position). The zero block yields (w = 0, c = 0).
/// Returns nullopt when M is not a PSD matrix of rank <= 1.
template <ScalarType T>
struct RankOneFactor {
    std::vector<T> w;
    T c;
    bool is_zero = false;
    bool leading_zero = false;  // w != 0 but w_1 == 0
};

template <ScalarType T>
std::optional<RankOneFactor<T>> factor_rank_one_psd(const Matrix<T>& m) {
    const std::size_t k = m.rows();
    const double scale = m.float_scale();
    RankOneFactor<T> out;
    if (m.is_zero()) {
        out.w.assign(k, m.zero());
        out.c = m.zero();
        out.is_zero = true;
        return out;
    }
    std::size_t t0 = k;
    for (std::size_t t = 0; t < k; ++t)
        if (!scalar_is_zero(m(t, t), scale)) {
            t0 = t;
            break;
        }
    if (t0 == k) return std::nullopt;  // nonzero with zero diagonal: not PSD rank one
    if (sign_of_real(m(t0, t0), scale) < 0) return std::nullopt;
    const T c = m(t0, t0);
    std::vector<T> w(k, m.zero());
    for (std::size_t s = 0; s < k; ++s) w[s] = m(s, t0) / c;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
            if (m(s, t) != c * w[s] * scalar_conj(w[t])) return std::nullopt;
    out.w = std::move(w);
    out.c = c;
    out.leading_zero = t0 > 0;
    return out;
}

/// Conditions (a) + (b) for a candidate diagonal block: PSD rank <= 1 and
/// entries in a single G-orbit.
template <ScalarType T>
bool diagonal_block_admissible(const HermitianMatrix<T>& a, const std::vector<std::size_t>& idx,
                               const GroupSpec& g) {
    Matrix<T> block = a.mat().principal_submatrix(idx);
    if (!factor_rank_one_psd(block)) return false;
    const T& ref = block(0, 0);
    for (std::size_t s = 0; s < idx.size(); ++s)
        for (std::size_t t = 0; t < idx.size(); ++t)
            if (!orbit_equivalent(block(s, t), ref, g)) return false;
    return true;
}

}  // namespace detail

/// Verifies conditions (a), (b), (c) of the stratification theorem for a
/// candidate partition; returns a human-readable reason on failure.
template <ScalarType T>
std::optional<std::string> stratum_conditions_violation(const HermitianMatrix<T>& a,
                                                        const Partition& p, const GroupSpec& g) {
    if (p.ground_size() != a.dim()) throw ShapeError("partition size does not match matrix");
    for (std::size_t j = 0; j < p.num_blocks(); ++j) {
        const auto& blk = p.block(j);
        Matrix<T> block = a.mat().principal_submatrix(blk);
        if (!detail::factor_rank_one_psd(block))
            return "diagonal block " + std::to_string(j + 1) +
                   " is not a PSD matrix of rank at most one";
        const T& ref = block(0, 0);
        for (std::size_t s = 0; s < blk.size(); ++s)
            for (std::size_t t = 0; t < blk.size(); ++t)
                if (!orbit_equivalent(block(s, t), ref, g))
                    return "diagonal block " + std::to_string(j + 1) +
                           " mixes entries from different orbits";
    }
    // (c) maximality: no block extends by a single outside index while
    // keeping (a) and (b).
    for (std::size_t j = 0; j < p.num_blocks(); ++j) {
        for (std::size_t t = 0; t < a.dim(); ++t) {
            if (p.block_of(t) == j) continue;
            std::vector<std::size_t> ext = p.block(j);
            ext.push_back(t);
            std::sort(ext.begin(), ext.end());
            if (detail::diagonal_block_admissible(a, ext, g))
                return "block " + std::to_string(j + 1) +
                       " is contained in a larger admissible diagonal block (add index " +
                       std::to_string(t + 1) + ")";
        }
    }
    return std::nullopt;
}

/// The stratification partition pi^G(A): the unique partition whose diagonal
/// blocks are maximal PSD rank-one blocks with single-orbit entries.
/// Requires a 3-PMP input. For G inside the unit circle this equals
/// pi_min(A, G); for general G a union-find over admissible 2x2 merges is
/// used. Both routes verify (a), (b), (c) afterwards and raise
/// VerificationFailed if the candidate fails, rather than asserting
/// uniqueness outside the territory the theorems cover.
template <ScalarType T>
Partition pi_stratum(const HermitianMatrix<T>& a, const GroupSpec& g) {
    const std::size_t n = a.dim();
    auto pmp3 = is_k_pmp(a, std::min<std::size_t>(3, n));
    if (!pmp3.holds)
        throw NotThreePmp("matrix is not 3-PMP", *pmp3.witness);
    Partition p = [&] {
        if (g.is_subgroup_of_unit_circle()) return pi_min(a, g);
        detail::DisjointSets ds(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (detail::diagonal_block_admissible(a, {i, j}, g)) ds.unite(i, j);
        std::vector<std::vector<std::size_t>> comp(n);
        for (std::size_t i = 0; i < n; ++i) comp[ds.find(i)].push_back(i);
        std::vector<std::vector<std::size_t>> blocks;
        for (auto& c : comp)
            if (!c.empty()) blocks.push_back(std::move(c));
        return Partition(n, std::move(blocks));
    }();
    if (auto why = stratum_conditions_violation(a, p, g))
        throw VerificationFailed("stratum conditions failed: " + *why);
    return p;
}

inline Partition pi_stratum(const HermitianMatrix<Rational>& a, const GroupSpec& g) {
    return pi_stratum(to_gaussian(a), g);
}

/// Rank-one certificates for a partition satisfying conditions (a)/(b):
/// normalized block vectors w_j (first nonzero entry 1, zero vector for zero
/// blocks) and the unique matrix C with A_{I_i x I_j} = c_ij w_i w_j^*.
/// With this normalization the diagonal of C carries the block magnitudes
/// (c_jj real >= 0); the unit-disc bounds |c_ij| <= 1 that hold for the
/// unit-normalized convention translate into |c_ij|^2 <= c_ii c_jj here.
template <ScalarType T>
struct StratumReport {
    Partition partition;
    std::vector<std::vector<T>> block_vectors;  // w_j, indexed like partition blocks
    Matrix<T> c;                                // m x m compression-style matrix
    std::vector<bool> leading_zero;             // w_j nonzero but its first entry is 0

    bool psd_input = false;
    std::size_t input_pmp_order = 0;
    std::optional<bool> maximal;   // condition (c), when a group was supplied
    std::optional<bool> orbit_ok;  // every block single-orbit, when a group was supplied
    std::optional<bool> disc_closed;  // |c_ij|^2 <= c_ii c_jj (PSD input only)
    std::optional<bool> disc_open;    // strict inequality off the diagonal
    std::size_t rank_c = 0;
    std::size_t rank_a = 0;
};

template <ScalarType T>
StratumReport<T> rank_one_certificates(const HermitianMatrix<T>& a, const Partition& p,
                                       const std::optional<GroupSpec>& g = std::nullopt) {
    if (p.ground_size() != a.dim()) throw ShapeError("partition size does not match matrix");
    const std::size_t m = p.num_blocks();
    std::vector<detail::RankOneFactor<T>> factors;
    factors.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto f = detail::factor_rank_one_psd(a.mat().principal_submatrix(p.block(j)));
        if (!f)
            throw ConditionsViolated("diagonal block " + std::to_string(j + 1) +
                                     " is not a PSD matrix of rank at most one");
        factors.push_back(std::move(*f));
    }
    if (g) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& blk = p.block(j);
            const T ref = a(blk.front(), blk.front());
            for (std::size_t s : blk)
                for (std::size_t t : blk)
                    if (!orbit_equivalent(a(s, t), ref, *g))
                        throw ConditionsViolated("diagonal block " + std::to_string(j + 1) +
                                                 " mixes entries from different orbits");
        }
    }
    // Unit coordinate of each nonzero w_j: global index where w_j equals 1.
    std::vector<std::size_t> unit_pos(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        if (factors[j].is_zero) continue;
        std::size_t local = 0;
        while (scalar_is_zero(factors[j].w[local])) ++local;
        unit_pos[j] = p.block(j)[local];
    }
    Matrix<T> c(m, m, a.mat().zero());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (factors[i].is_zero || factors[j].is_zero) {
                // convention: c_ij = 0 unless both block vectors are nonzero
                for (std::size_t s : p.block(i))
                    for (std::size_t t : p.block(j))
                        if (!scalar_is_zero(a(s, t), a.mat().float_scale()))
                            throw ConditionsViolated(
                                "nonzero off-diagonal block against a zero diagonal block");
                continue;
            }
            c(i, j) = a(unit_pos[i], unit_pos[j]);
        }
    }
    // Verify the reconstruction A_{I_i x I_j} = c_ij w_i w_j^* entrywise.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto& bi = p.block(i);
            const auto& bj = p.block(j);
            for (std::size_t s = 0; s < bi.size(); ++s)
                for (std::size_t t = 0; t < bj.size(); ++t)
                    if (a(bi[s], bj[t]) != c(i, j) * factors[i].w[s] * scalar_conj(factors[j].w[t]))
                        throw ConditionsViolated(
                            "off-diagonal block (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") does not factor as c_ij u_i u_j^*");
        }

    StratumReport<T> report{
        .partition = p,
        .block_vectors = {},
        .c = c,
        .leading_zero = {},
        .psd_input = false,
        .input_pmp_order = 0,
        .maximal = std::nullopt,
        .orbit_ok = std::nullopt,
        .disc_closed = std::nullopt,
        .disc_open = std::nullopt,
        .rank_c = rank(c),
        .rank_a = rank(a.mat()),
    };
    for (std::size_t j = 0; j < m; ++j) {
        report.block_vectors.push_back(factors[j].w);
        report.leading_zero.push_back(factors[j].leading_zero);
    }
    report.input_pmp_order = pmp_order(a);
    report.psd_input = report.input_pmp_order == a.dim();
    if (g) {
        report.maximal = !stratum_conditions_violation(a, p, *g).has_value();
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = 0; j < m && ok; ++j) {
                const auto& bi = p.block(i);
                const auto& bj = p.block(j);
                const T ref = a(bi.front(), bj.front());
                for (std::size_t s : bi)
                    for (std::size_t t : bj)
                        if (!orbit_equivalent(a(s, t), ref, *g)) {
                            ok = false;
                            break;
                        }
            }
        report.orbit_ok = ok;
    }
    if (report.psd_input) {
        bool closed = true;
        bool open = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                if (factors[i].is_zero || factors[j].is_zero) continue;
                auto lhs = modulus_squared(c(i, j));
                auto rhs_i = real_part(c(i, i));
                auto rhs_j = real_part(c(j, j));
                auto rhs = rhs_i * rhs_j;
                if (lhs > rhs) closed = false;
                if (!(lhs < rhs)) open = false;
            }
        report.disc_closed = closed;
        report.disc_open = open;
    }
    return report;
}

/// The compression of a block-constant matrix: B_ij is the constant value
/// of the block A_{I_i x I_j}. Verified entrywise; raises NotBlockConstant
/// naming the first offending block pair.
template <ScalarType T>
HermitianMatrix<T> compression(const HermitianMatrix<T>& a, const Partition& p) {
    if (p.ground_size() != a.dim()) throw ShapeError("partition size does not match matrix");
    const std::size_t m = p.num_blocks();
    Matrix<T> b(m, m, a.mat().zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const T v = a(p.block(i).front(), p.block(j).front());
            for (std::size_t s : p.block(i))
                for (std::size_t t : p.block(j))
                    if (a(s, t) != v)
                        throw NotBlockConstant("block (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) +
                                               ") is not constant; compression undefined");
            b(i, j) = v;
        }
    return HermitianMatrix<T>(std::move(b));
}

/// Expansion: the block-constant matrix with constant B_ij on I_i x I_j.
/// Left inverse of compression.
template <ScalarType T>
HermitianMatrix<T> expand_compression(const HermitianMatrix<T>& b, const Partition& p) {
    if (p.num_blocks() != b.dim()) throw ShapeError("partition block count does not match matrix");
    const std::size_t n = p.ground_size();
    Matrix<T> a(n, n, b.mat().zero());
    for (std::size_t i = 0; i < p.num_blocks(); ++i)
        for (std::size_t j = 0; j < p.num_blocks(); ++j)
            for (std::size_t s : p.block(i))
                for (std::size_t t : p.block(j)) a(s, t) = b(i, j);
    return HermitianMatrix<T>(std::move(a));
}

// ---------------------------------------------------------------------------
// Hershkowitz-Neumann-Schneider decomposition
// ---------------------------------------------------------------------------

/// Decomposition of a 3-PMP matrix with entries of modulus 0 or 1:
/// (QD)^{-1} A (QD) is block diagonal with all-ones or all-zero blocks,
/// where Q permutes the indices into `order` and D carries the unit phases.
/// Such a matrix is positive semidefinite as a corollary.
template <ScalarType T>
struct HnsDecomposition {
    std::vector<std::size_t> order;  // canonical position -> original index
    std::vector<T> phases;           // d_i, indexed by original index, |d_i| = 1
    std::vector<std::pair<std::size_t, bool>> blocks;  // (size, is_ones)
    bool certified_psd = false;
};

/// The conjugated matrix (QD)^{-1} A (QD) determined by the decomposition.
template <ScalarType T>
Matrix<T> hns_canonical_form(const HermitianMatrix<T>& a, const HnsDecomposition<T>& dec) {
    const std::size_t n = a.dim();
    Matrix<T> k(n, n, a.mat().zero());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            k(r, s) = scalar_conj(dec.phases[dec.order[r]]) * a(dec.order[r], dec.order[s]) *
                      dec.phases[dec.order[s]];
    return k;
}

/// The expected canonical pattern: direct sum of all-ones / all-zero blocks.
template <ScalarType T>
Matrix<T> hns_block_pattern(const HnsDecomposition<T>& dec, const T& one) {
    std::vector<Matrix<T>> parts;
    parts.reserve(dec.blocks.size());
    for (const auto& [size, is_ones] : dec.blocks)
        parts.push_back(is_ones ? Matrix<T>::ones(size, size, one)
                                : Matrix<T>(size, size, zero_like(one)));
    return direct_sum(parts);
}

template <ScalarType T>
HnsDecomposition<T> hns_decompose(const HermitianMatrix<T>& a) {
    const std::size_t n = a.dim();
    const double scale = a.mat().float_scale();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (scalar_is_zero(a(i, j), scale)) continue;
            const auto m2 = modulus_squared(a(i, j));
            const bool unit = [&] {
                if constexpr (scalar_traits<T>::is_exact)
                    return m2 == Rational(1);
                else
                    return ComplexFloat(m2) == ComplexFloat(1.0);
            }();
            if (!unit)
                throw EntriesNotUnimodular("entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") has modulus != 0, 1");
        }
    auto pmp3 = is_k_pmp(a, std::min<std::size_t>(3, n));
    if (!pmp3.holds) throw NotThreePmp("matrix is not 3-PMP", *pmp3.witness);

    detail::DisjointSets ds(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!scalar_is_zero(a(i, j), scale)) ds.unite(i, j);
    std::vector<std::vector<std::size_t>> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[ds.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> components;
    for (auto& c : comp)
        if (!c.empty()) components.push_back(std::move(c));
    std::sort(components.begin(), components.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });

    HnsDecomposition<T> dec;
    dec.phases.assign(n, a.mat().one());
    for (const auto& cmp : components) {
        const std::size_t head = cmp.front();
        const bool is_ones =
            cmp.size() > 1 || !scalar_is_zero(a(head, head), scale);
        dec.blocks.emplace_back(cmp.size(), is_ones);
        dec.order.insert(dec.order.end(), cmp.begin(), cmp.end());
        if (is_ones) {
            // d_t = conj(a_{head,t}); the first-row minor identity
            // 2 Re(a_{head,i} a_{ij} a_{j,head}) - 2 >= 0 forces the product
            // to equal 1, which makes the conjugated block all ones.
            for (std::size_t t : cmp) {
                if (scalar_is_zero(a(head, t), scale))
                    throw VerificationFailed(
                        "nonzero component is not complete despite the 3-PMP check");
                dec.phases[t] = scalar_conj(a(head, t));
            }
        }
    }
    Matrix<T> k = hns_canonical_form(a, dec);
    Matrix<T> expected = hns_block_pattern(dec, a.mat().one());
    if constexpr (scalar_traits<T>::is_exact) {
        if (k != expected)
            throw VerificationFailed("HNS conjugation did not reach the canonical block form");
    } else {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                if (k(r, s) != expected(r, s))
                    throw VerificationFailed(
                        "HNS conjugation did not reach the canonical block form");
    }
    dec.certified_psd = true;  // canonical form is a direct sum of PSD blocks
    return dec;
}

}  // namespace simkern
