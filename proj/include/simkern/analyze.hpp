#pragma once

/*
 * Aggregated reports over a dynamically-typed matrix: the full analysis
 * (stratification, PMP order, signature, kernels), the theorem battery run
 * by the verify command, and the generator dispatch by family name.
 */

#include <cstdint>
#include <map>
#include <string>

#include "simkern/io.hpp"

namespace simkern {

/// Full single-matrix report: pmp_order, signature, pi_min, stratum
/// partition + certificates, simultaneous kernel. Square GF matrices get
/// the any-field treatment (column partition + kernel) instead.
Json analyze_matrix(const AnyMatrix& matrix, const GroupSpec& group);

struct BatteryResult {
    bool ok = true;                 // no unexpected violation
    std::vector<Json> checks;      // one JSON line per check
    Json witness = nullptr;        // serialized matrix on first violation
};

/// Runs every applicable theorem check on one matrix. Counterexample paths
/// (e.g. non-3-PMP inputs whose kernel chain separates) count as passes.
/// `suite` filters by check-name prefix; empty runs everything.
BatteryResult theorem_battery(const AnyMatrix& matrix, const std::string& suite = "");

/// Seed-indexed mixed corpus entry used by `verify --corpus`.
AnyMatrix corpus_matrix(std::uint64_t seed);

struct GeneratedAny {
    AnyMatrix matrix;
    Certificate certificate;
    std::optional<Rational> epsilon;
};

/// Generator dispatch by family name with "key=value" parameters
/// (lambda-shift, vandermonde, psrp-gap, signature, toeplitz, random-psd,
/// random-hns, random-hermitian, and the printed examples by name).
GeneratedAny generate_family(const std::string& family,
                             const std::map<std::string, std::string>& params,
                             std::uint64_t seed);

}  // namespace simkern
