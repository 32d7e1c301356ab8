#include <doctest.h>

#include "simkern/generators.hpp"

using namespace simkern;

namespace {
GaussianRational gr(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("gen_lambda_shift: certificates across the filtration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Rational> lambdas = {Rational(-1), Rational(0), Rational(1, 2),
                                         Rational(static_cast<long long>(n)),
                                         Rational(2 * static_cast<long long>(n) + 1, 2)};
        for (std::size_t k = 1; k <= n; ++k)
            lambdas.emplace_back(2 * static_cast<long long>(k) - 1, 2);  // k - 1/2
        for (const auto& lambda : lambdas) {
            auto gen = gen_lambda_shift(n, lambda);
            INFO("N=", n, " lambda=", lambda.to_string());
            CHECK(gen.certificate.all_passed());
        }
    }
    auto g = gen_lambda_shift(3, Rational(3, 2));
    CHECK(pmp_order(g.matrix) == 1);
    CHECK((signature(g.matrix) == Signature{2, 0, 1}));
    auto edge = gen_lambda_shift(1, Rational(0));
    CHECK(edge.matrix.mat() == Matrix<Rational>(1, 1, Rational(-1)));
    CHECK(pmp_order(edge.matrix) == 0);
}

TEST_CASE("gen_vandermonde_psd: frozen example and envelope sweep") {
    auto gen = gen_vandermonde_psd(3, 2, {Rational(1), Rational(2), Rational(3)});
    CHECK(gen.matrix.mat() == Matrix<Rational>({{2, 3, 4}, {3, 5, 7}, {4, 7, 10}}));
    CHECK(rank(gen.matrix.mat()) == 2);
    CHECK(principal_minor(gen.matrix, {0, 1}) == Rational(1));
    CHECK(principal_minor(gen.matrix, {0, 2}) == Rational(4));
    CHECK(principal_minor(gen.matrix, {1, 2}) == Rational(1));
    CHECK(principal_minor(gen.matrix, {0, 1, 2}) == Rational(0));
    CHECK(gen.certificate.all_passed());

    for (std::size_t l = 1; l <= 6; ++l)
        for (std::size_t m = 1; m <= l; ++m) {
            auto g = gen_vandermonde_psd(l, m, vandermonde_nodes(l));
            INFO("l=", l, " m=", m);
            CHECK(g.certificate.all_passed());
            if (m == l) CHECK(sign_of_real(determinant(g.matrix.mat())) > 0);
        }

    auto rank_one = gen_vandermonde_psd(2, 1, {Rational(1), Rational(2)});
    CHECK(rank_one.matrix.mat() == Matrix<Rational>({{1, 1}, {1, 1}}));

    CHECK_THROWS_AS(gen_vandermonde_psd(2, 0, vandermonde_nodes(2)), InvalidGenerator);
    CHECK_THROWS_AS(gen_vandermonde_psd(2, 3, vandermonde_nodes(2)), InvalidGenerator);
    CHECK_THROWS_AS(gen_vandermonde_psd(2, 1, {Rational(1), Rational(1)}), InvalidGenerator);
    CHECK_THROWS_AS(gen_vandermonde_psd(2, 1, {Rational(0), Rational(1)}), InvalidGenerator);
}

TEST_CASE("gen_psrp_gap: all admissible parameters up to N = 6") {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t l = 2; l < n; ++l)
            for (std::size_t k = 2; k <= l; ++k) {
                auto gen = gen_psrp_gap(n, l, k);
                INFO("N=", n, " l=", l, " k=", k);
                CHECK(gen.certificate.all_passed());
                CHECK(gen.epsilon.has_value());
            }
    auto gen = gen_psrp_gap(5, 3, 2);
    std::vector<std::size_t> lead = {0, 1, 2}, all = {0, 1, 2, 3, 4};
    CHECK(rank(gen.matrix.mat().principal_submatrix(lead)) == 1);
    CHECK(rank(gen.matrix.mat().submatrix(lead, all)) == 3);
    CHECK(is_k_pmp(gen.matrix, 2).holds);
    CHECK_FALSE(is_k_psrp(gen.matrix, 3).holds);

    auto gen42 = gen_psrp_gap(4, 2, 2);
    CHECK(rank(gen42.matrix.mat().submatrix({0, 1}, {0, 1, 2, 3})) == 2);

    CHECK_THROWS_AS(gen_psrp_gap(4, 3, 1), InvalidGenerator);
    CHECK_THROWS_AS(gen_psrp_gap(4, 4, 2), InvalidGenerator);  // l < N required
    CHECK_THROWS_AS(gen_psrp_gap(4, 2, 3), InvalidGenerator);  // k <= l required
}

TEST_CASE("gen_signature_example: targeted cases") {
    auto gen = gen_signature_example(4, 2, 2, 1);
    CHECK((signature(gen.matrix) == Signature{2, 1, 1}));
    CHECK(pmp_order(gen.matrix) == 2);
    CHECK(gen.certificate.all_passed());

    // k = 0: the B_eps part is -eps * Id, all diagonal entries negative
    auto zero_k = gen_signature_example(3, 0, 0, 3);
    CHECK((signature(zero_k.matrix) == Signature{0, 0, 3}));
    CHECK(pmp_order(zero_k.matrix) == 0);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(sign_of_real(zero_k.matrix(i, i)) < 0);
    CHECK(zero_k.certificate.all_passed());

    auto top = gen_signature_example(5, 4, 4, 1);
    CHECK((signature(top.matrix) == Signature{4, 0, 1}));
    CHECK(top.certificate.all_passed());

    CHECK_THROWS_AS(gen_signature_example(4, 2, 1, 1), InvalidGenerator);  // n+ < k
    CHECK_THROWS_AS(gen_signature_example(4, 2, 2, 0), InvalidGenerator);  // n- = 0
    CHECK_THROWS_AS(gen_signature_example(4, 4, 4, 1), InvalidGenerator);  // k = N
    CHECK_THROWS_AS(gen_signature_example(3, 1, 3, 1), InvalidGenerator);  // n+ + n- > N
}

TEST_CASE("gen_signature_example: every admissible signature at N = 5") {
    const std::size_t n = 5;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t n_plus = k; n_plus + 1 <= n; ++n_plus)
            for (std::size_t n_minus = 1; n_plus + n_minus <= n; ++n_minus) {
                auto gen = gen_signature_example(n, k, n_plus, n_minus);
                INFO("k=", k, " n+=", n_plus, " n-=", n_minus);
                CHECK(gen.certificate.all_passed());
                CHECK((signature(gen.matrix) ==
                       Signature{n_plus, n - n_plus - n_minus, n_minus}));
            }
}

TEST_CASE("gen_toeplitz_tridiag") {
    auto t5 = gen_toeplitz_tridiag(5);
    CHECK(t5.certificate.all_passed());
    CHECK(t5.matrix.mat() == Matrix<Rational>({{1, 1, 0, 0, 0},
                                               {1, 1, 1, 0, 0},
                                               {0, 1, 1, 1, 0},
                                               {0, 0, 1, 1, 1},
                                               {0, 0, 0, 1, 1}}));
    auto t3 = gen_toeplitz_tridiag(3);
    CHECK(principal_minor(t3.matrix, {0, 1, 2}) == Rational(-1));
    CHECK(t3.certificate.all_passed());
    CHECK(gen_toeplitz_tridiag(4).certificate.all_passed());
    CHECK(gen_toeplitz_tridiag(8).certificate.all_passed());
    CHECK(gen_toeplitz_tridiag(11).certificate.all_passed());
    CHECK_THROWS_AS(gen_toeplitz_tridiag(2), InvalidGenerator);
}

TEST_CASE("gen_random_psd: certificates, determinism, full rank case") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 8);
        std::size_t r = 1 + static_cast<std::size_t>(seed % n);
        auto gen = gen_random_psd(n, r, seed);
        INFO("seed=", seed);
        CHECK(gen.certificate.all_passed());
    }
    CHECK(gen_random_psd(5, 2, 42).matrix == gen_random_psd(5, 2, 42).matrix);
    CHECK(gen_random_psd(5, 2, 42).matrix != gen_random_psd(5, 2, 43).matrix);
    int full_rank = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        if (rank(gen_random_psd(4, 4, seed).matrix.mat()) == 4) ++full_rank;
    CHECK(full_rank >= 18);  // r = N is positive definite generically
    CHECK_THROWS_AS(gen_random_psd(3, 0, 1), InvalidGenerator);
    CHECK_THROWS_AS(gen_random_psd(3, 4, 1), InvalidGenerator);
}

TEST_CASE("gen_random_unimodular_hns: certificates and determinism") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 8);
        auto gen = gen_random_unimodular_hns(n, seed);
        INFO("seed=", seed);
        CHECK(gen.certificate.all_passed());
    }
    CHECK(gen_random_unimodular_hns(6, 7).matrix == gen_random_unimodular_hns(6, 7).matrix);
}

TEST_CASE("gen_named_example: the four named matrices") {
    auto five = gen_named_example("example5x5");
    CHECK(five.certificate.all_passed());
    CHECK(five.matrix(0, 3) == gr(0, -2));
    CHECK(five.matrix(3, 0) == gr(0, 2));
    CHECK(rank(five.matrix.mat()) == 2);
    CHECK(pmp_order(five.matrix) == 5);

    auto six = gen_named_example("pmp2-6x6");
    CHECK(six.certificate.all_passed());
    CHECK(six.matrix.dim() == 6);

    auto hns = gen_named_example("hns-fail-3x3");
    CHECK(hns.certificate.all_passed());
    CHECK(hns.matrix.mat() ==
          Matrix<GaussianRational>({{gr(1), gr(1), gr(-1)}, {gr(1), gr(1), gr(1)},
                                    {gr(-1), gr(1), gr(1)}}));

    auto pow2 = gen_named_example("pow2-psd", 4);
    CHECK(pow2.certificate.all_passed());
    CHECK(pow2.matrix.dim() == 4);
    CHECK(pow2.matrix(1, 1) == gr(8));

    CHECK_THROWS_AS(gen_named_example("unknown"), InvalidGenerator);
}
