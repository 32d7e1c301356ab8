#pragma once

/*
 * JSON (and CSV) serialization for matrices, partitions, kernels and
 * reports. Exact scalars round-trip bit-exactly: rationals as "p/q" strings,
 * Gaussian rationals as {"re","im"} string pairs, GF elements as
 * {"val","p"}, floats as {"re","im"} numbers. Matrix payloads carry a
 * "domain" tag; square matrices serialize with "n", rectangular ones with
 * "rows"/"cols". Partitions and witness index sets are 1-based on the wire.
 */

#include <json.hpp>

#include <string>
#include <variant>

#include "simkern/generators.hpp"
#include "simkern/kernels.hpp"
#include "simkern/matrix.hpp"
#include "simkern/partition.hpp"
#include "simkern/pmp.hpp"
#include "simkern/strata.hpp"

namespace simkern {

using Json = nlohmann::json;

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<GaussianRational>,
                               Matrix<PrimeFieldElement>, Matrix<ComplexFloat>>;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Json scalar_to_json(const Rational& x) { return x.to_string(); }
inline Json scalar_to_json(const GaussianRational& z) {
    return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}};
}
inline Json scalar_to_json(const PrimeFieldElement& x) {
    return Json{{"val", x.value()}, {"p", x.modulus()}};
}
inline Json scalar_to_json(const ComplexFloat& z) {
    return Json{{"re", z.re()}, {"im", z.im()}};
}

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
ComplexFloat complex_float_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

template <ScalarType T>
Json matrix_to_json(const Matrix<T>& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    Json out{{"domain", scalar_traits<T>::domain_name},
             {"rows", m.rows()},
             {"cols", m.cols()},
             {"entries", std::move(entries)}};
    if (m.is_square()) out["n"] = m.rows();
    return out;
}

inline Json matrix_to_json(const AnyMatrix& m) {
    return std::visit([](const auto& mm) { return matrix_to_json(mm); }, m);
}

template <ScalarType T>
Json matrix_to_json(const HermitianMatrix<T>& m) {
    return matrix_to_json(m.mat());
}

/// Parses {"domain", "entries", "n"|"rows"/"cols"}; the domain tag selects
/// the scalar parser. GF payloads must agree on a single modulus.
AnyMatrix matrix_from_json(const Json& j);

/// JSON or CSV, sniffed: payloads starting with '{' parse as JSON, anything
/// else as comma-separated rational rows.
AnyMatrix matrix_from_text(const std::string& text);

Matrix<Rational> matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const Matrix<Rational>& m);

/// Coerces a matrix into another scalar domain where a faithful embedding
/// exists (rational -> gaussian-rational, exact -> float, real gaussian ->
/// rational); anything else raises UnsupportedDomainError.
AnyMatrix convert_domain(const AnyMatrix& m, const std::string& target);

// ---------------------------------------------------------------------------
// Partitions, kernels, reports
// ---------------------------------------------------------------------------

inline Json index_set_to_json(const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(i + 1);
    return out;
}

inline Json partition_to_json(const Partition& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) blocks.push_back(index_set_to_json(b));
    return Json{{"n", p.ground_size()}, {"blocks", std::move(blocks)}};
}

Partition partition_from_json(const Json& j);

inline Json signature_to_json(const Signature& s) {
    return Json{{"n_plus", s.n_plus}, {"n_zero", s.n_zero}, {"n_minus", s.n_minus}};
}

template <ScalarType T>
Json kernel_to_json(const KernelBasis<T>& k) {
    Json vectors = Json::array();
    for (const auto& v : k.vectors) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(scalar_to_json(x));
        vectors.push_back(std::move(row));
    }
    return Json{{"ambient", k.ambient}, {"dim", k.dimension()}, {"vectors", std::move(vectors)}};
}

template <ScalarType T>
Json pmp_verdict_to_json(const PmpVerdict<T>& v) {
    Json out{{"holds", v.holds}};
    out["witness"] = v.witness ? index_set_to_json(*v.witness) : Json(nullptr);
    return out;
}

template <ScalarType T>
Json stratum_report_to_json(const StratumReport<T>& r) {
    Json vectors = Json::array();
    for (const auto& w : r.block_vectors) {
        Json row = Json::array();
        for (const auto& x : w) row.push_back(scalar_to_json(x));
        vectors.push_back(std::move(row));
    }
    Json flags{{"psd_input", r.psd_input}, {"pmp_order", r.input_pmp_order}};
    flags["maximal"] = r.maximal ? Json(*r.maximal) : Json(nullptr);
    flags["orbit_ok"] = r.orbit_ok ? Json(*r.orbit_ok) : Json(nullptr);
    flags["disc_closed"] = r.disc_closed ? Json(*r.disc_closed) : Json(nullptr);
    flags["disc_open"] = r.disc_open ? Json(*r.disc_open) : Json(nullptr);
    Json leading = Json::array();
    for (std::size_t j = 0; j < r.leading_zero.size(); ++j)
        if (r.leading_zero[j]) leading.push_back(j + 1);
    flags["leading_zero_blocks"] = std::move(leading);
    return Json{{"partition", partition_to_json(r.partition)},
                {"u", std::move(vectors)},
                {"C", matrix_to_json(r.c)},
                {"rank_C", r.rank_c},
                {"rank_A", r.rank_a},
                {"flags", std::move(flags)}};
}

template <ScalarType T>
Json hns_to_json(const HnsDecomposition<T>& d) {
    Json order = Json::array();
    for (std::size_t i : d.order) order.push_back(i + 1);
    Json phases = Json::array();
    for (const auto& x : d.phases) phases.push_back(scalar_to_json(x));
    Json blocks = Json::array();
    for (const auto& [size, ones] : d.blocks) blocks.push_back(Json{{"size", size}, {"ones", ones}});
    return Json{{"order", std::move(order)},
                {"phases", std::move(phases)},
                {"blocks", std::move(blocks)},
                {"certified_psd", d.certified_psd}};
}

template <ScalarType T>
Json t3pmp_report_to_json(const T3pmpReport<T>& r) {
    Json equal = Json::array();
    Json dims = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        dims.push_back(r.spaces[i].dimension());
        Json row = Json::array();
        for (std::size_t j = 0; j < 4; ++j) row.push_back(r.equal[i][j]);
        equal.push_back(std::move(row));
    }
    Json spaces = Json::array();
    for (const auto& s : r.spaces) spaces.push_back(kernel_to_json(s));
    return Json{{"pi", partition_to_json(r.pi)}, {"is_3pmp", r.input_is_3pmp},
                {"dims", std::move(dims)},      {"equal", std::move(equal)},
                {"all_equal", r.all_equal},     {"spaces", std::move(spaces)}};
}

inline Json certificate_to_json(const Certificate& c) {
    Json items = Json::array();
    for (const auto& item : c.items) {
        Json j{{"name", item.name}, {"passed", item.passed}};
        if (!item.detail.empty()) j["detail"] = item.detail;
        items.push_back(std::move(j));
    }
    return Json{{"items", std::move(items)}, {"all_passed", c.all_passed()}};
}

}  // namespace simkern
