#include "simkern/generators.hpp"

namespace simkern {

namespace {

GaussianRational gr(long long re, long long im = 0) {
    return {Rational(re), Rational(im)};
}

}  // namespace

// 5x5 PSD worked example: stratification partitions {{1,2,5},{3},{4}} for
// the trivial group and {{1,2,4,5},{3}} for the fourth roots of unity and
// the unit circle.
HermitianMatrix<GaussianRational> worked_example_5x5() {
    return HermitianMatrix<GaussianRational>(Matrix<GaussianRational>({
        {gr(2), gr(2), gr(1), gr(0, -2), gr(2)},
        {gr(2), gr(2), gr(1), gr(0, -2), gr(2)},
        {gr(1), gr(1), gr(1), gr(0, -1), gr(1)},
        {gr(0, 2), gr(0, 2), gr(0, 1), gr(2), gr(0, 2)},
        {gr(2), gr(2), gr(1), gr(0, -2), gr(2)},
    }));
}

// 6x6 matrix that is 2-PMP but not 3-PMP; for G = {1,-1} its pi_min is
// {{1,2,3},{4,5,6}} with all four blocks non-singular.
HermitianMatrix<GaussianRational> worked_example_pmp2_6x6() {
    return HermitianMatrix<GaussianRational>(Matrix<GaussianRational>({
        {gr(2), gr(2), gr(-2), gr(1), gr(1), gr(-1)},
        {gr(2), gr(2), gr(2), gr(1), gr(1), gr(1)},
        {gr(-2), gr(2), gr(2), gr(-1), gr(1), gr(1)},
        {gr(1), gr(1), gr(-1), gr(2), gr(2), gr(-2)},
        {gr(1), gr(1), gr(1), gr(2), gr(2), gr(2)},
        {gr(-1), gr(1), gr(1), gr(-2), gr(2), gr(2)},
    }));
}

// 3x3 Hermitian matrix with unimodular entries that is 2-PMP but not 3-PMP;
// the HNS decomposition rejects it with witness {1,2,3}.
HermitianMatrix<GaussianRational> worked_example_hns_fail_3x3() {
    return HermitianMatrix<GaussianRational>(Matrix<GaussianRational>({
        {gr(1), gr(1), gr(-1)},
        {gr(1), gr(1), gr(1)},
        {gr(-1), gr(1), gr(1)},
    }));
}

// [[1,2],[2,8]] (+) Id_{N-2}: PSD, and for G = <2> the pi_min block {1,2}
// has rank 2, separating pi_min from the stratum partition.
HermitianMatrix<GaussianRational> worked_example_pow2_psd(std::size_t n) {
    if (n < 3) throw InvalidGenerator("pow2-psd needs N >= 3");
    Matrix<GaussianRational> m(n, n, gr(0));
    m(0, 0) = gr(1);
    m(0, 1) = gr(2);
    m(1, 0) = gr(2);
    m(1, 1) = gr(8);
    for (std::size_t i = 2; i < n; ++i) m(i, i) = gr(1);
    return HermitianMatrix<GaussianRational>(std::move(m));
}

GeneratedMatrix<GaussianRational> gen_named_example(const std::string& name, std::size_t n) {
    if (name == "example5x5") {
        GeneratedMatrix<GaussianRational> out{worked_example_5x5(), {}, std::nullopt};
        out.certificate.check("positive semidefinite", signature(out.matrix).n_minus == 0);
        out.certificate.check("rank == 2", rank(out.matrix.mat()) == 2);
        return out;
    }
    if (name == "pmp2-6x6") {
        GeneratedMatrix<GaussianRational> out{worked_example_pmp2_6x6(), {}, std::nullopt};
        out.certificate.check("2-PMP", is_k_pmp(out.matrix, 2).holds);
        out.certificate.check("not 3-PMP", !is_k_pmp(out.matrix, 3).holds);
        return out;
    }
    if (name == "hns-fail-3x3") {
        GeneratedMatrix<GaussianRational> out{worked_example_hns_fail_3x3(), {}, std::nullopt};
        out.certificate.check("2-PMP", is_k_pmp(out.matrix, 2).holds);
        out.certificate.check("not 3-PMP", !is_k_pmp(out.matrix, 3).holds);
        return out;
    }
    if (name == "pow2-psd") {
        GeneratedMatrix<GaussianRational> out{worked_example_pow2_psd(n), {}, std::nullopt};
        out.certificate.check("positive semidefinite", signature(out.matrix).n_minus == 0);
        return out;
    }
    throw InvalidGenerator("unknown example name: '" + name +
                           "' (expected example5x5 | pmp2-6x6 | hns-fail-3x3 | pow2-psd)");
}

}  // namespace simkern
