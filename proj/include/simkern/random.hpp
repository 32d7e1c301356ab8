#pragma once

/*
 * Deterministic seeded randomness for corpus generation. mt19937_64 is
 * fully specified by the standard, so a fixed seed yields bit-identical
 * matrices on every platform. Rational entries are drawn with bounded
 * numerator/denominator to control coefficient growth in exact elimination.
 */

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "simkern/matrix.hpp"

namespace simkern {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi] inclusive. Rejection sampling on the raw
    /// engine output; unlike std::uniform_int_distribution this is fully
    /// pinned down, so a seed draws the same values on every platform.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t wrap = (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
        const std::uint64_t limit = 0 - wrap;  // span * floor(2^64 / span)
        std::uint64_t r = eng_();
        while (wrap != 0 && r >= limit) r = eng_();
        return lo + static_cast<long long>(r % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

    /// Fisher-Yates with the portable uniform draw above.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long long>(i) - 1))]);
    }

    Rational rational(long long max_num = 10, long long max_den = 10) {
        return {uniform(-max_num, max_num), uniform(1, max_den)};
    }

    Rational nonzero_rational(long long max_num = 10, long long max_den = 10) {
        Rational r = rational(max_num, max_den);
        while (r.is_zero()) r = rational(max_num, max_den);
        return r;
    }

    GaussianRational gaussian_rational(long long max_num = 10, long long max_den = 10) {
        Rational re = rational(max_num, max_den);
        Rational im = rational(max_num, max_den);
        return {re, im};
    }

    /// One of {1, -1, i, -i}: the roots of unity available in QQ(i).
    GaussianRational fourth_root_of_unity() {
        switch (uniform(0, 3)) {
            case 0: return GaussianRational(1);
            case 1: return GaussianRational(-1);
            case 2: return GaussianRational::i();
            default: return -GaussianRational::i();
        }
    }

    PrimeFieldElement gf(std::uint64_t p) { return {uniform(0, static_cast<long long>(p) - 1), p}; }

    template <ScalarType T>
    T scalar();

    template <ScalarType T>
    Matrix<T> matrix(std::size_t rows, std::size_t cols) {
        Matrix<T> out(rows, cols, T(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = scalar<T>();
        return out;
    }

    Matrix<PrimeFieldElement> gf_matrix(std::size_t rows, std::size_t cols, std::uint64_t p) {
        Matrix<PrimeFieldElement> out(rows, cols, PrimeFieldElement(0, p));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = gf(p);
        return out;
    }

    /// Random Hermitian matrix with bounded Gaussian-rational entries.
    HermitianMatrix<GaussianRational> hermitian(std::size_t n) {
        Matrix<GaussianRational> m(n, n, GaussianRational(0));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = GaussianRational(rational());
            for (std::size_t j = i + 1; j < n; ++j) {
                GaussianRational z = gaussian_rational();
                m(i, j) = z;
                m(j, i) = z.conj();
            }
        }
        return HermitianMatrix<GaussianRational>(std::move(m));
    }

private:
    std::mt19937_64 eng_;
};

template <>
inline Rational SeededRng::scalar<Rational>() {
    return rational();
}

template <>
inline GaussianRational SeededRng::scalar<GaussianRational>() {
    return gaussian_rational();
}

}  // namespace simkern
