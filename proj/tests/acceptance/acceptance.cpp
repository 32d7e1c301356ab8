/*
 * Acceptance suite: one criterion per section, each with its stated time
 * budget, printing one PASS/FAIL line per criterion. All checks are exact
 * (zero tolerance) unless stated otherwise. Exit code 0 iff every criterion
 * passes within budget.
 */

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "../oracle.hpp"
#include "simkern/analyze.hpp"

using namespace simkern;

namespace {

struct Check {
    std::vector<std::string> failures;
    long asserts = 0;

    void require(bool condition, const std::string& what) {
        ++asserts;
        if (!condition && failures.size() < 5) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Check&)> body;
};

GaussianRational gr(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }

Partition parts(std::size_t n, std::vector<std::vector<std::size_t>> blocks_1based) {
    for (auto& b : blocks_1based)
        for (auto& i : b) --i;
    return {n, std::move(blocks_1based)};
}

// --------------------------------------------------------------------------
// 1. pi_min of the printed 5x5 worked example, three groups, bit-exact
// --------------------------------------------------------------------------
void criterion_worked_example(Check& c) {
    auto a = worked_example_5x5();
    c.require(pi_min(a, GroupSpec::trivial()) == parts(5, {{1, 2, 5}, {3}, {4}}),
              "pi_min under the trivial group");
    c.require(pi_min(a, GroupSpec::roots_of_unity(4)) == parts(5, {{1, 2, 4, 5}, {3}}),
              "pi_min under the fourth roots of unity");
    c.require(pi_min(a, GroupSpec::unit_circle()) == parts(5, {{1, 2, 4, 5}, {3}}),
              "pi_min under the unit circle");
}

// --------------------------------------------------------------------------
// 2. kernel equalities for 300 generated 3-PMP matrices, N <= 7
// --------------------------------------------------------------------------
void criterion_t3pmp_corpus(Check& c) {
    int count = 0;
    // 200 random PSD matrices
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 7);
        std::size_t r = 1 + static_cast<std::size_t>(seed % n);
        auto a = gen_random_psd(n, r, seed).matrix;
        auto report = verify_t3pmp(a);
        c.require(report.all_equal, "kernel spaces differ on PSD seed " + std::to_string(seed));
        c.require(report.spaces[0].dimension() == n - report.pi.num_blocks(),
                  "dimension formula on PSD seed " + std::to_string(seed));
        ++count;
    }
    // 100 signature-example outputs with pmp_order >= 3
    int made = 0;
    for (std::size_t n = 4; n <= 7 && made < 100; ++n)
        for (std::size_t k = 3; k < n && made < 100; ++k)
            for (std::size_t n_plus = k; n_plus < n && made < 100; ++n_plus)
                for (std::size_t n_minus = 1; n_plus + n_minus <= n && made < 100; ++n_minus)
                    for (int rep = 0; rep < 4 && made < 100; ++rep) {
                        auto a = gen_signature_example(n, k, n_plus, n_minus).matrix;
                        auto report = verify_t3pmp(a);
                        c.require(report.all_equal && report.input_is_3pmp,
                                  "kernel spaces differ on a signature example");
                        c.require(report.spaces[0].dimension() == n - report.pi.num_blocks(),
                                  "dimension formula on a signature example");
                        ++made;
                        ++count;
                    }
    c.require(count >= 300, "corpus size " + std::to_string(count) + " < 300");
}

// --------------------------------------------------------------------------
// 3. Toeplitz counterexample for N in {5, 8, 11}
// --------------------------------------------------------------------------
void criterion_toeplitz(Check& c) {
    for (std::size_t n : {5UL, 8UL, 11UL}) {
        auto t = gen_toeplitz_tridiag(n).matrix;
        Partition pi = pi_min(t, GroupSpec::trivial());
        c.require(pi == Partition::singletons(n), "pi^{1}(T_N) must be all singletons");
        c.require(ker_block_ones<Rational>(pi, Rational(1)).is_trivial(),
                  "ker J_pi must be trivial");
        KernelBasis<Rational> alt;
        alt.ambient = n;
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 3 == 0) v[i] = Rational(1);
            if (i % 3 == 1) v[i] = Rational(-1);
        }
        alt.vectors.push_back(std::move(v));
        c.require(subspace_contained(alt, simultaneous_kernel(t)),
                  "alternating vector must lie in the simultaneous kernel of T_" +
                      std::to_string(n));
    }
}

// --------------------------------------------------------------------------
// 4. HNS round-trips for 200 seeded inputs + rejection of the counterexample
// --------------------------------------------------------------------------
void criterion_hns(Check& c) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 8);
        auto gen = gen_random_unimodular_hns(n, seed);
        c.require(gen.certificate.all_passed(),
                  "generator certificate failed at seed " + std::to_string(seed));
        auto dec = hns_decompose(gen.matrix);
        c.require(hns_canonical_form(gen.matrix, dec) == hns_block_pattern(dec, gr(1)),
                  "canonical form mismatch at seed " + std::to_string(seed));
        c.require(dec.certified_psd && signature(gen.matrix).n_minus == 0,
                  "PSD certificate failed at seed " + std::to_string(seed));
    }
    bool rejected = false;
    try {
        hns_decompose(worked_example_hns_fail_3x3());
    } catch (const NotThreePmp& e) {
        rejected = e.witness() == std::vector<std::size_t>{0, 1, 2};
    }
    c.require(rejected, "3x3 counterexample must be rejected with witness {1,2,3}");
}

// --------------------------------------------------------------------------
// 5. k-PMP => (k-1)-PSRP on 500 matrices; the gap construction fails l-PSRP
// --------------------------------------------------------------------------
void criterion_psrp(Check& c) {
    int count = 0;
    for (std::uint64_t i = 0; count < 500; ++i) {
        const std::size_t k = 2 + static_cast<std::size_t>(i % 3);  // 2, 3, 4
        HermitianMatrix<Rational> a = [&]() -> HermitianMatrix<Rational> {
            switch (i % 4) {
                case 0: {
                    // pmp_order exactly k
                    std::size_t n = k + 1 + static_cast<std::size_t>(i / 7 % (8 - k));
                    std::size_t n_plus = k + static_cast<std::size_t>(i / 11 % (n - k));
                    std::size_t n_minus = 1;
                    return gen_signature_example(n, k, std::min(n_plus, n - 1), n_minus).matrix;
                }
                case 1: {
                    // lambda in [k, k+1) gives a k-PMP shifted all-ones matrix
                    std::size_t n = std::max<std::size_t>(k + 1, 4 + i / 5 % 5);
                    return gen_lambda_shift(n, Rational(2 * static_cast<long long>(k) + 1, 2))
                        .matrix;
                }
                case 2: {
                    std::size_t n = std::max<std::size_t>(k + 2, 4 + i / 3 % 5);
                    std::size_t l = k + static_cast<std::size_t>(i / 13 % (n - k - 1));
                    return gen_psrp_gap(n, std::max(l, k), k).matrix;
                }
                default: {
                    std::size_t l = std::max<std::size_t>(k, 2 + i / 9 % 7);
                    return gen_vandermonde_psd(l, 1 + i / 17 % l, vandermonde_nodes(l)).matrix;
                }
            }
        }();
        c.require(is_k_pmp(a, std::min(k, a.dim())).holds,
                  "corpus entry is not k-PMP at i=" + std::to_string(i));
        c.require(is_k_psrp(a, std::min(k, a.dim()) - 1).holds,
                  "(k-1)-PSRP failed at i=" + std::to_string(i));
        ++count;
    }
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t l = 2; l < n; ++l)
            for (std::size_t k = 2; k <= l; ++k) {
                auto gen = gen_psrp_gap(n, l, k);
                c.require(gen.certificate.all_passed(),
                          "gap certificate (properties 1-3, l-PSRP failure) at N=" +
                              std::to_string(n) + " l=" + std::to_string(l) +
                              " k=" + std::to_string(k));
                c.require(!is_k_psrp(gen.matrix, l).holds,
                          "gap output unexpectedly satisfies the l-PSRP");
            }
}

// --------------------------------------------------------------------------
// 6. every admissible signature is attained with pmp_order == k, N <= 6
// --------------------------------------------------------------------------
void criterion_signature(Check& c) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t n_plus = k; n_plus < n; ++n_plus)
                for (std::size_t n_minus = 1; n_plus + n_minus <= n; ++n_minus) {
                    auto gen = gen_signature_example(n, k, n_plus, n_minus);
                    std::string tag = " at (N,k,n+,n-) = (" + std::to_string(n) + "," +
                                      std::to_string(k) + "," + std::to_string(n_plus) + "," +
                                      std::to_string(n_minus) + ")";
                    c.require(gen.certificate.all_passed(), "generator certificate" + tag);
                    c.require(signature(gen.matrix) ==
                                  Signature{n_plus, n - n_plus - n_minus, n_minus},
                              "signature" + tag);
                    c.require(pmp_order(gen.matrix) == k, "pmp order" + tag);
                    // part (1): the bound holds on the generated non-PSD matrix
                    PmpSignatureReport bound = check_pmp_signature(gen.matrix);
                    c.require(bound.consistent, "n+ >= k, n- >= 1 bound" + tag);
                }
}

// --------------------------------------------------------------------------
// 7. pi_min equals the brute-force coarsest partition, N <= 5, 100 per group
// --------------------------------------------------------------------------
void criterion_pexists(Check& c) {
    const std::vector<GroupSpec> groups = {GroupSpec::trivial(), GroupSpec::roots_of_unity(2),
                                           GroupSpec::roots_of_unity(4), GroupSpec::unit_circle()};
    SeededRng rng(777);
    for (const auto& g : groups) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 3));
            HermitianMatrix<GaussianRational> a =
                rng.coin() ? oracle::orbit_structured(rng, n, g) : rng.hermitian(n);
            auto expected = oracle::brute_force_pi_min(a, g);
            c.require(expected.has_value(), "coarsest orbit-constant partition is not unique");
            if (expected)
                c.require(pi_min(a, g) == *expected,
                          "pi_min disagrees with brute force under " + g.to_string());
        }
    }
}

// --------------------------------------------------------------------------
// 8. rectangular recipe vs brute force; distinct-diagonal triviality
// --------------------------------------------------------------------------
void criterion_rectangular(Check& c) {
    SeededRng rng(888);
    int done = 0;
    while (done < 200) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        switch (done % 3) {
            case 0: {
                Matrix<Rational> m(rows, cols, Rational(0));
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j)
                        m(i, j) = Rational(rng.uniform(-2, 2));
                auto recipe = rectangular_simultaneous_kernel(m);
                c.require(subspace_equal(recipe.kernel,
                                         stacked_kernel(hadamard_power_sweep(
                                             m, std::max<std::size_t>(cols, 2)))),
                          "recipe vs brute force over QQ");
                break;
            }
            case 1: {
                Matrix<PrimeFieldElement> m = rng.gf_matrix(rows, cols, 5);
                auto recipe = rectangular_simultaneous_kernel(m);
                c.require(
                    subspace_equal(recipe.kernel,
                                   stacked_kernel(hadamard_power_sweep(
                                       m, std::max<std::size_t>(cols, 5)))),
                    "recipe vs brute force over GF(5)");
                break;
            }
            default: {
                Matrix<PrimeFieldElement> m = rng.gf_matrix(rows, cols, 7);
                auto recipe = rectangular_simultaneous_kernel(m);
                c.require(
                    subspace_equal(recipe.kernel,
                                   stacked_kernel(hadamard_power_sweep(
                                       m, std::max<std::size_t>(cols, 7)))),
                    "recipe vs brute force over GF(7)");
                break;
            }
        }
        ++done;
    }
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        if (trial % 2 == 0) {
            Matrix<Rational> m = rng.matrix<Rational>(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    while (m(i, j) == m(i, i)) m(i, j) = rng.rational();
            auto report = distinct_diagonal_check(m);
            c.require(report.hypothesis_holds && report.kernel.is_trivial(),
                      "distinct-diagonal kernel over QQ must be trivial");
        } else {
            const std::uint64_t p = (trial % 4 == 1) ? 5 : 7;
            Matrix<PrimeFieldElement> m = rng.gf_matrix(n, n, p);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    while (m(i, j) == m(i, i)) m(i, j) = rng.gf(p);
            auto report = distinct_diagonal_check(m);
            c.require(report.hypothesis_holds && report.kernel.is_trivial(),
                      "distinct-diagonal kernel over GF(p) must be trivial");
        }
    }
}

// --------------------------------------------------------------------------
// 9. c-independence of the positive-combination kernel on PSD matrices
// --------------------------------------------------------------------------
void criterion_c_independence(Check& c) {
    SeededRng rng(999);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 7);
        std::size_t r = 1 + static_cast<std::size_t>(seed % n);
        auto a = gen_random_psd(n, r, seed).matrix;
        KernelBasis<GaussianRational> reference = simultaneous_kernel(a);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> coeff;
            for (std::size_t j = 0; j < n; ++j)
                coeff.push_back({rng.uniform(1, 9), rng.uniform(1, 9)});
            c.require(subspace_equal(positive_combination_kernel(a, coeff), reference),
                      "combination kernel differs at seed " + std::to_string(seed));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }

    std::vector<Criterion> criteria = {
        {1, "pi_min of the worked 5x5 example under {1}, mu_4 and S^1", 0.010,
         criterion_worked_example},
        {2, "kernel chain + dimension formula on 300 generated 3-PMP matrices", 60.0,
         criterion_t3pmp_corpus},
        {3, "Toeplitz counterexample: trivial ker J_pi, alternating kernel vector", 1.0,
         criterion_toeplitz},
        {4, "HNS round-trip on 200 seeded inputs; counterexample rejected", 10.0, criterion_hns},
        {5, "k-PMP implies (k-1)-PSRP on 500 matrices; gap family fails the l-PSRP", 120.0,
         criterion_psrp},
        {6, "every admissible signature attained with pmp_order k, N <= 6", 60.0,
         criterion_signature},
        {7, "pi_min equals brute force over all partitions, 100 per group", 30.0,
         criterion_pexists},
        {8, "rectangular recipe vs brute force; distinct-diagonal triviality", 30.0,
         criterion_rectangular},
        {9, "positive-combination kernel independent of coefficients", 30.0,
         criterion_c_independence},
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool within_budget = elapsed <= criterion.budget_seconds;
        bool ok = check.failures.empty() && within_budget;
        all_ok = all_ok && ok;

        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << criterion.id << "  " << criterion.title << "  ["
             << check.asserts << " checks, " << static_cast<long>(elapsed * 1000.0)
             << " ms / budget " << static_cast<long>(criterion.budget_seconds * 1000.0) << " ms]";
        if (!within_budget) line << "  over budget";
        for (const auto& f : check.failures) line << "\n      " << f;
        std::cout << line.str() << "\n";
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
              << "\n";
    return all_ok ? 0 : 1;
}
