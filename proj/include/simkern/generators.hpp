#pragma once

/*
 * Constructors for the matrix families the theory builds, each returning
 * the matrix together with a machine-checked certificate of its claimed
 * properties. The non-constructive "epsilon small enough" steps are made
 * effective by an adaptive search: start at 1 and halve until the
 * certificate conditions hold (termination is guaranteed by the continuity
 * arguments behind the constructions).
 */

#include <optional>
#include <string>
#include <vector>

#include "simkern/kernels.hpp"
#include "simkern/pmp.hpp"
#include "simkern/random.hpp"
#include "simkern/strata.hpp"

namespace simkern {

struct Certificate {
    struct Item {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    std::vector<Item> items;

    void check(std::string name, bool passed, std::string detail = "") {
        items.push_back({std::move(name), passed, std::move(detail)});
    }

    bool all_passed() const {
        for (const auto& item : items)
            if (!item.passed) return false;
        return true;
    }
};

template <ScalarType T>
struct GeneratedMatrix {
    HermitianMatrix<T> matrix;
    Certificate certificate;
    std::optional<Rational> epsilon;  // set by the adaptive constructions
};

// ---------------------------------------------------------------------------
// lambda * Id - ones
// ---------------------------------------------------------------------------

/// lambda Id_N - 1_N; (k-1)-PMP but not k-PMP exactly when
/// lambda in [k-1, k). Eigenvalues: lambda - N once, lambda with
/// multiplicity N - 1.
inline GeneratedMatrix<Rational> gen_lambda_shift(std::size_t n, const Rational& lambda) {
    if (n < 1) throw InvalidGenerator("size must be >= 1");
    Matrix<Rational> m(n, n, Rational(-1));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda - Rational(1);
    GeneratedMatrix<Rational> out{HermitianMatrix<Rational>(std::move(m)), {}, std::nullopt};

    std::size_t expected_order;
    if (lambda >= Rational(static_cast<long long>(n)))
        expected_order = n;
    else if (lambda < Rational(0))
        expected_order = 0;
    else
        expected_order = static_cast<std::size_t>(lambda.floor().get_ui());
    std::size_t order = pmp_order(out.matrix);
    out.certificate.check("pmp_order == floor(lambda) (clamped to [0, N])", order == expected_order,
                          "order=" + std::to_string(order));

    auto count = [&](const Rational& eig, std::size_t mult, Signature& s) {
        if (eig > Rational(0))
            s.n_plus += mult;
        else if (eig < Rational(0))
            s.n_minus += mult;
        else
            s.n_zero += mult;
    };
    Signature expected_sig;
    count(lambda - Rational(static_cast<long long>(n)), 1, expected_sig);
    count(lambda, n - 1, expected_sig);
    Signature sig = signature(out.matrix);
    out.certificate.check("signature matches the two-eigenvalue spectrum", sig == expected_sig,
                          sig.to_string());
    return out;
}

// ---------------------------------------------------------------------------
// Vandermonde-based PSD with strictly positive small minors
// ---------------------------------------------------------------------------

/// A = sum_{i=0}^{m-1} u^{oi} (u^{oi})^T for a vector u of l distinct
/// nonzero rationals: PSD of rank m with all p x p principal minors
/// strictly positive for p <= m.
inline GeneratedMatrix<Rational> gen_vandermonde_psd(std::size_t l, std::size_t m,
                                                     const std::vector<Rational>& u) {
    if (m < 1 || m > l) throw InvalidGenerator("need 1 <= m <= l");
    if (u.size() != l) throw InvalidGenerator("u must have l entries");
    for (std::size_t i = 0; i < l; ++i) {
        if (u[i].is_zero()) throw InvalidGenerator("entries of u must be nonzero");
        for (std::size_t j = i + 1; j < l; ++j)
            if (u[i] == u[j]) throw InvalidGenerator("entries of u must be distinct");
    }
    Matrix<Rational> a(l, l, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < l; ++s)
            for (std::size_t t = 0; t < l; ++t)
                a(s, t) += pow(u[s], static_cast<unsigned long>(i)) *
                           pow(u[t], static_cast<unsigned long>(i));
    GeneratedMatrix<Rational> out{HermitianMatrix<Rational>(std::move(a)), {}, std::nullopt};

    out.certificate.check("rank == m", rank(out.matrix.mat()) == m);
    bool strict = true;
    for (std::size_t p = 1; p <= m && strict; ++p) {
        auto bad = detail::first_subset(l, p, [&](const std::vector<std::size_t>& idx) {
            return sign_of_real(principal_minor(out.matrix, idx)) <= 0;
        });
        if (bad) strict = false;
    }
    out.certificate.check("all principal minors of size <= m strictly positive", strict);
    out.certificate.check("positive semidefinite", signature(out.matrix).n_minus == 0);
    return out;
}

/// Default node vector (1, 2, ..., l).
inline std::vector<Rational> vandermonde_nodes(std::size_t l) {
    std::vector<Rational> u;
    u.reserve(l);
    for (std::size_t i = 1; i <= l; ++i) u.emplace_back(static_cast<long long>(i));
    return u;
}

// ---------------------------------------------------------------------------
// PSRP gap construction
// ---------------------------------------------------------------------------

/// k-PMP matrix M = [[A, B],[B^T, Id]] whose leading l x l block A has rank
/// k-1 while [A B] has rank min(l, k-1+N-l); M fails the l-PSRP.
inline GeneratedMatrix<Rational> gen_psrp_gap(std::size_t n, std::size_t l, std::size_t k) {
    if (!(2 <= k && k <= l && l < n))
        throw InvalidGenerator("need 2 <= k <= l < N");
    GeneratedMatrix<Rational> base = gen_vandermonde_psd(l, k - 1, vandermonde_nodes(l));
    const Matrix<Rational>& a = base.matrix.mat();
    KernelBasis<Rational> ker = kernel_basis(a);  // dimension l - k + 1
    const std::size_t span_dim = std::min(l - k + 1, n - l);

    auto assemble = [&](const Rational& eps) {
        Matrix<Rational> m(n, n, Rational(0));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) m(i, j) = a(i, j);
        for (std::size_t col = 0; col < n - l; ++col) {
            const auto& v = ker.vectors[col % ker.vectors.size()];
            for (std::size_t i = 0; i < l; ++i) {
                m(i, l + col) = eps * v[i];
                m(l + col, i) = eps * v[i];
            }
        }
        for (std::size_t i = l; i < n; ++i) m(i, i) = Rational(1);
        return HermitianMatrix<Rational>(std::move(m));
    };

    Rational eps(1);
    std::optional<HermitianMatrix<Rational>> m;
    for (int iter = 0; iter < 200; ++iter) {
        HermitianMatrix<Rational> candidate = assemble(eps);
        if (is_k_pmp(candidate, k).holds) {
            m = std::move(candidate);
            break;
        }
        eps /= Rational(2);
    }
    if (!m)
        throw VerificationFailed("no epsilon small enough for the k-PMP property was found");

    GeneratedMatrix<Rational> out{std::move(*m), {}, eps};
    out.certificate.check("(1) M is k-PMP", is_k_pmp(out.matrix, k).holds);
    std::vector<std::size_t> lead(l), all(n);
    std::iota(lead.begin(), lead.end(), std::size_t{0});
    std::iota(all.begin(), all.end(), std::size_t{0});
    out.certificate.check("(2) rank(A) == k-1",
                          rank(out.matrix.mat().principal_submatrix(lead)) == k - 1);
    out.certificate.check(
        "(3) rank([A B]) == min(l, k-1+N-l)",
        rank(out.matrix.mat().submatrix(lead, all)) == std::min(l, k - 1 + n - l));
    out.certificate.check("fails the l-PSRP", !is_k_psrp(out.matrix, l).holds,
                          "span dim " + std::to_string(span_dim));
    return out;
}

// ---------------------------------------------------------------------------
// Signature construction
// ---------------------------------------------------------------------------

/// Projection matrix onto the kernel of a real symmetric matrix, exact.
inline Matrix<Rational> kernel_projection(const Matrix<Rational>& b) {
    KernelBasis<Rational> ker = kernel_basis(b);
    const std::size_t s = b.rows();
    if (ker.is_trivial()) return Matrix<Rational>(s, s, Rational(0));
    // K has the kernel basis as columns; P = K (K^T K)^{-1} K^T.
    Matrix<Rational> kmat(s, ker.dimension(), Rational(0));
    for (std::size_t c = 0; c < ker.dimension(); ++c)
        for (std::size_t r = 0; r < s; ++r) kmat(r, c) = ker.vectors[c][r];
    Matrix<Rational> kt = kmat.transpose();
    return kmat * inverse(kt * kmat) * kt;
}

/// A = B_eps (+) Id_{n+ - k} (+) 0 with B_eps = B - eps P: signature
/// (n+, N - n+ - n-, n-), k-PMP but not (k+1)-PMP, every (k+1) x (k+1)
/// principal minor of the B_eps part negative.
inline GeneratedMatrix<Rational> gen_signature_example(std::size_t n, std::size_t k,
                                                       std::size_t n_plus, std::size_t n_minus) {
    if (!(n_plus >= k && n_minus >= 1 && n_plus + n_minus <= n && k < n))
        throw InvalidGenerator("need n+ >= k, n- >= 1, n+ + n- <= N, 0 <= k < N");
    const std::size_t s = k + n_minus;
    Matrix<Rational> b = (k == 0)
                             ? Matrix<Rational>(s, s, Rational(0))
                             : gen_vandermonde_psd(s, k, vandermonde_nodes(s)).matrix.mat();
    Matrix<Rational> proj = kernel_projection(b);

    auto b_eps_ok = [&](const HermitianMatrix<Rational>& be) {
        for (std::size_t p = 1; p <= k; ++p)
            if (detail::first_subset(s, p, [&](const std::vector<std::size_t>& idx) {
                    return sign_of_real(principal_minor(be, idx)) <= 0;
                }))
                return false;
        if (detail::first_subset(s, k + 1, [&](const std::vector<std::size_t>& idx) {
                return sign_of_real(principal_minor(be, idx)) >= 0;
            }))
            return false;
        return signature(be) == Signature{k, 0, n_minus};
    };

    Rational eps(1);
    std::optional<HermitianMatrix<Rational>> b_eps;
    for (int iter = 0; iter < 200; ++iter) {
        HermitianMatrix<Rational> candidate(b - eps * proj);
        if (b_eps_ok(candidate)) {
            b_eps = std::move(candidate);
            break;
        }
        eps /= Rational(2);
    }
    if (!b_eps)
        throw VerificationFailed("no epsilon small enough for the signature construction");

    const std::size_t n_zero = n - n_plus - n_minus;
    Matrix<Rational> a(n, n, Rational(0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a(i, j) = (*b_eps)(i, j);
    for (std::size_t i = s; i < s + (n_plus - k); ++i) a(i, i) = Rational(1);
    // remaining n_zero rows/columns stay zero

    GeneratedMatrix<Rational> out{HermitianMatrix<Rational>(std::move(a)), {}, eps};
    Signature sig = signature(out.matrix);
    out.certificate.check("signature == (n+, n0, n-)", sig == Signature{n_plus, n_zero, n_minus},
                          sig.to_string());
    out.certificate.check("pmp_order == k", pmp_order(out.matrix) == k);
    bool all_negative = !detail::first_subset(s, k + 1, [&](const std::vector<std::size_t>& idx) {
        return sign_of_real(principal_minor(*b_eps, idx)) >= 0;
    });
    out.certificate.check("every (k+1)-minor of B_eps negative", all_negative);
    out.certificate.check("not PSD", sig.n_minus >= 1);
    return out;
}

// ---------------------------------------------------------------------------
// Toeplitz tridiagonal counterexample family
// ---------------------------------------------------------------------------

/// The 0/1 Toeplitz tridiagonal matrix T_N: 2-PMP but not 3-PMP, with
/// all-singleton stratification; for N = 3k+2 the alternating vector
/// (1,-1,0,1,-1,0,...,1,-1) lies in the simultaneous kernel.
inline GeneratedMatrix<Rational> gen_toeplitz_tridiag(std::size_t n) {
    if (n < 3) throw InvalidGenerator("Toeplitz tridiagonal family needs N >= 3");
    Matrix<Rational> t(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i > j ? i - j : j - i) <= 1) t(i, j) = Rational(1);
    GeneratedMatrix<Rational> out{HermitianMatrix<Rational>(std::move(t)), {}, std::nullopt};

    out.certificate.check("pmp_order == 2", pmp_order(out.matrix) == 2);
    out.certificate.check("pi^{1} is the all-singleton partition",
                          pi_min(out.matrix, GroupSpec::trivial()) == Partition::singletons(n));
    if (n % 3 == 2) {
        KernelBasis<Rational> witness;
        witness.ambient = n;
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 3 == 0) v[i] = Rational(1);
            if (i % 3 == 1) v[i] = Rational(-1);
        }
        witness.vectors.push_back(std::move(v));
        out.certificate.check("alternating vector lies in the simultaneous kernel",
                              subspace_contained(witness, simultaneous_kernel(out.matrix)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random families
// ---------------------------------------------------------------------------

/// V V^* for a random N x r Gaussian-rational matrix V: PSD of rank <= r.
inline GeneratedMatrix<GaussianRational> gen_random_psd(std::size_t n, std::size_t r,
                                                        std::uint64_t seed) {
    if (r < 1 || r > n) throw InvalidGenerator("need 1 <= r <= N");
    SeededRng rng(seed);
    Matrix<GaussianRational> v = rng.matrix<GaussianRational>(n, r);
    Matrix<GaussianRational> a = v * v.conj_transpose();
    GeneratedMatrix<GaussianRational> out{HermitianMatrix<GaussianRational>(std::move(a)),
                                          {},
                                          std::nullopt};
    Signature sig = signature(out.matrix);
    out.certificate.check("positive semidefinite", sig.n_minus == 0, sig.to_string());
    out.certificate.check("rank <= r", rank(out.matrix.mat()) <= r);
    return out;
}

/// (QD) (direct sum of ones/zero blocks) (QD)^{-1} for a random permutation,
/// random block sizes, and phases in {1, -1, i, -i}: an exact input of the
/// Hershkowitz-Neumann-Schneider class.
inline GeneratedMatrix<GaussianRational> gen_random_unimodular_hns(std::size_t n,
                                                                   std::uint64_t seed) {
    if (n < 1) throw InvalidGenerator("size must be >= 1");
    SeededRng rng(seed);
    std::vector<std::pair<std::size_t, bool>> blocks;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t size =
            static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(std::min<std::size_t>(remaining, 4))));
        blocks.emplace_back(size, rng.coin());
        remaining -= size;
    }
    std::vector<Matrix<GaussianRational>> parts;
    for (const auto& [size, is_ones] : blocks)
        parts.push_back(is_ones ? Matrix<GaussianRational>::ones(size, size, GaussianRational(1))
                                : Matrix<GaussianRational>(size, size, GaussianRational(0)));
    Matrix<GaussianRational> j = direct_sum(parts);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    Matrix<GaussianRational> p(n, n, GaussianRational(0));
    for (std::size_t r = 0; r < n; ++r) p(perm[r], r) = rng.fourth_root_of_unity();
    Matrix<GaussianRational> a = p * j * p.conj_transpose();

    GeneratedMatrix<GaussianRational> out{HermitianMatrix<GaussianRational>(std::move(a)),
                                          {},
                                          std::nullopt};
    bool unimodular = true;
    for (std::size_t r = 0; r < n && unimodular; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            Rational m2 = out.matrix(r, s).modulus_squared();
            if (!(m2 == Rational(0) || m2 == Rational(1))) {
                unimodular = false;
                break;
            }
        }
    out.certificate.check("entries of modulus 0 or 1", unimodular);
    out.certificate.check("positive semidefinite", signature(out.matrix).n_minus == 0);
    return out;
}

// ---------------------------------------------------------------------------
// Named example matrices
// ---------------------------------------------------------------------------

HermitianMatrix<GaussianRational> worked_example_5x5();
HermitianMatrix<GaussianRational> worked_example_pmp2_6x6();
HermitianMatrix<GaussianRational> worked_example_hns_fail_3x3();
HermitianMatrix<GaussianRational> worked_example_pow2_psd(std::size_t n = 3);

/// Lookup by name: example5x5 | pmp2-6x6 | hns-fail-3x3 | pow2-psd.
GeneratedMatrix<GaussianRational> gen_named_example(const std::string& name, std::size_t n = 3);

}  // namespace simkern
