#pragma once

/*
 * Multiplicative subgroups G of C^x used for orbit equivalence of matrix
 * entries: {1}, the k-th roots of unity, the unit circle, all of C^x, and
 * the cyclic group generated by a fixed Gaussian rational.
 *
 * Normalization at construction: RootsOfUnity(1) collapses to Trivial and
 * a cyclic generator that is a root of unity (the only ones in QQ(i) are
 * +-1, +-i) collapses to RootsOfUnity(order). Orbit membership for a
 * cyclic generator of modulus 1 that is not a root of unity is not
 * decidable by bounded search and is surfaced as UnsupportedGroup.
 */

#include <string>
#include <variant>

#include "simkern/scalars.hpp"

namespace simkern {

class GroupSpec {
public:
    struct Trivial {
        friend bool operator==(const Trivial&, const Trivial&) = default;
    };
    struct RootsOfUnity {
        unsigned long k;
        friend bool operator==(const RootsOfUnity&, const RootsOfUnity&) = default;
    };
    struct UnitCircle {
        friend bool operator==(const UnitCircle&, const UnitCircle&) = default;
    };
    struct NonzeroComplex {
        friend bool operator==(const NonzeroComplex&, const NonzeroComplex&) = default;
    };
    struct Cyclic {
        GaussianRational gen;
        friend bool operator==(const Cyclic&, const Cyclic&) = default;
    };

    using Variant = std::variant<Trivial, RootsOfUnity, UnitCircle, NonzeroComplex, Cyclic>;

    static GroupSpec trivial() { return GroupSpec(Trivial{}); }

    static GroupSpec roots_of_unity(unsigned long k) {
        if (k == 0) throw UnsupportedGroup("roots-of-unity order must be >= 1");
        if (k == 1) return trivial();
        return GroupSpec(RootsOfUnity{k});
    }

    static GroupSpec unit_circle() { return GroupSpec(UnitCircle{}); }
    static GroupSpec nonzero_complex() { return GroupSpec(NonzeroComplex{}); }

    static GroupSpec cyclic(const GaussianRational& g) {
        if (g.is_zero()) throw UnsupportedGroup("cyclic generator must be nonzero");
        if (g == GaussianRational(1)) return trivial();
        if (g == GaussianRational(-1)) return roots_of_unity(2);
        if (g == GaussianRational::i() || g == -GaussianRational::i()) return roots_of_unity(4);
        return GroupSpec(Cyclic{g});
    }

    const Variant& raw() const { return v_; }

    bool is_subgroup_of_unit_circle() const {
        return std::holds_alternative<Trivial>(v_) || std::holds_alternative<RootsOfUnity>(v_) ||
               std::holds_alternative<UnitCircle>(v_);
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

    /// CLI form: trivial | roots:<k> | circle | nonzero | cyclic:<g>.
    std::string to_string() const;
    static GroupSpec parse(const std::string& text);

private:
    explicit GroupSpec(Variant v) : v_(std::move(v)) {}

    Variant v_;
};

namespace detail {

/// Finds n with g^n == value inside the cyclic group generated by g, where
/// |g|^2 != 1; the candidate n is pinned down by the strictly monotone
/// modulus ladder |g|^(2n), then verified exactly.
bool cyclic_orbit_contains(const GaussianRational& g, const GaussianRational& value);

}  // namespace detail

/// True iff a lies in the G-orbit of b (the orbit of 0 is {0}).
bool orbit_equivalent(const GaussianRational& a, const GaussianRational& b, const GroupSpec& g);
bool orbit_equivalent(const ComplexFloat& a, const ComplexFloat& b, const GroupSpec& g);

inline bool orbit_equivalent(const Rational& a, const Rational& b, const GroupSpec& g) {
    return orbit_equivalent(to_gaussian(a), to_gaussian(b), g);
}

}  // namespace simkern
