#include "simkern/groups.hpp"

#include <cmath>
#include <cstdlib>

namespace simkern {

std::string GroupSpec::to_string() const {
    return std::visit(
        [](const auto& g) -> std::string {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Trivial>) return "trivial";
            if constexpr (std::is_same_v<G, RootsOfUnity>) return "roots:" + std::to_string(g.k);
            if constexpr (std::is_same_v<G, UnitCircle>) return "circle";
            if constexpr (std::is_same_v<G, NonzeroComplex>) return "nonzero";
            if constexpr (std::is_same_v<G, Cyclic>) {
                std::string s = "cyclic:" + g.gen.re().to_string();
                if (!g.gen.im().is_zero()) {
                    s += (g.gen.im().sign() < 0 ? "-" : "+");
                    s += g.gen.im().abs().to_string() + "i";
                }
                return s;
            }
        },
        v_);
}

namespace {

GaussianRational parse_gaussian_literal(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i') return GaussianRational(Rational::from_string(text));
    std::string body = text.substr(0, text.size() - 1);
    if (body.empty()) return GaussianRational::i();
    // Split off the imaginary term at the last top-level sign. A sign can
    // only start a rational, so any '+'/'-' at index >= 1 is the separator.
    std::size_t sep = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            sep = i;
            break;
        }
    }
    if (sep == std::string::npos) {
        std::string im = (body == "-") ? "-1" : body;
        return {Rational(0), Rational::from_string(im)};
    }
    Rational re = Rational::from_string(body.substr(0, sep));
    std::string im_body = body.substr(sep + 1);
    Rational im = im_body.empty() ? Rational(1) : Rational::from_string(im_body);
    if (body[sep] == '-') im = -im;
    return {re, im};
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
    if (text == "trivial") return trivial();
    if (text == "circle") return unit_circle();
    if (text == "nonzero") return nonzero_complex();
    if (text.rfind("roots:", 0) == 0) {
        const std::string body = text.substr(6);
        char* end = nullptr;
        unsigned long k = std::strtoul(body.c_str(), &end, 10);
        if (body.empty() || end == nullptr || *end != '\0' || k == 0)
            throw ParseError("invalid roots-of-unity order: '" + body + "'");
        return roots_of_unity(k);
    }
    if (text.rfind("cyclic:", 0) == 0) return cyclic(parse_gaussian_literal(text.substr(7)));
    throw ParseError("unknown group spec: '" + text +
                     "' (expected trivial | roots:<k> | circle | nonzero | cyclic:<g>)");
}

namespace detail {

bool cyclic_orbit_contains(const GaussianRational& g, const GaussianRational& value) {
    const Rational mg = g.modulus_squared();
    if (mg == Rational(1))
        throw UnsupportedGroup(
            "orbit membership for a cyclic generator on the unit circle that is not a root of "
            "unity is undecidable by bounded search");
    const Rational mv = value.modulus_squared();
    if (mv == Rational(1)) return value == GaussianRational(1);  // only g^0 has modulus 1
    // Work with a ladder base of modulus > 1.
    GaussianRational base = g;
    Rational mb = mg;
    if (mb < Rational(1)) {
        base = GaussianRational(1) / g;
        mb = base.modulus_squared();
    }
    GaussianRational target = value;
    if (mv < Rational(1)) target = GaussianRational(1) / value;
    // Now |target|^2 > 1; find the unique n >= 1 with |base|^(2n) == |target|^2.
    const Rational mt = target.modulus_squared();
    GaussianRational acc = base;
    Rational macc = mb;
    while (macc < mt) {
        acc *= base;
        macc = acc.modulus_squared();
    }
    // If value = g^n at all, then target = base^j for exactly this j.
    return macc == mt && acc == target;
}

}  // namespace detail

bool orbit_equivalent(const GaussianRational& a, const GaussianRational& b, const GroupSpec& g) {
    return std::visit(
        [&](const auto& grp) -> bool {
            using G = std::decay_t<decltype(grp)>;
            if constexpr (std::is_same_v<G, GroupSpec::Trivial>) {
                return a == b;
            } else if constexpr (std::is_same_v<G, GroupSpec::RootsOfUnity>) {
                if (b.is_zero()) return a.is_zero();
                if (a.is_zero()) return false;
                return pow(a / b, grp.k) == GaussianRational(1);
            } else if constexpr (std::is_same_v<G, GroupSpec::UnitCircle>) {
                return a.modulus_squared() == b.modulus_squared();
            } else if constexpr (std::is_same_v<G, GroupSpec::NonzeroComplex>) {
                return a.is_zero() == b.is_zero();
            } else {
                if (b.is_zero()) return a.is_zero();
                if (a.is_zero()) return false;
                return detail::cyclic_orbit_contains(grp.gen, a / b);
            }
        },
        g.raw());
}

bool orbit_equivalent(const ComplexFloat& a, const ComplexFloat& b, const GroupSpec& g) {
    return std::visit(
        [&](const auto& grp) -> bool {
            using G = std::decay_t<decltype(grp)>;
            if constexpr (std::is_same_v<G, GroupSpec::Trivial>) {
                return a == b;
            } else if constexpr (std::is_same_v<G, GroupSpec::RootsOfUnity>) {
                if (b.is_zero()) return a.is_zero();
                if (a.is_zero()) return false;
                return pow(a / b, grp.k) == ComplexFloat(1.0);
            } else if constexpr (std::is_same_v<G, GroupSpec::UnitCircle>) {
                return ComplexFloat(a.modulus_squared()) == ComplexFloat(b.modulus_squared());
            } else if constexpr (std::is_same_v<G, GroupSpec::NonzeroComplex>) {
                return a.is_zero() == b.is_zero();
            } else {
                const Rational mg2 = grp.gen.modulus_squared();
                if (mg2 == Rational(1))
                    throw UnsupportedGroup(
                        "orbit membership for a cyclic generator on the unit circle that is not "
                        "a root of unity is undecidable by bounded search");
                if (b.is_zero()) return a.is_zero();
                if (a.is_zero()) return false;
                const ComplexFloat gen(grp.gen.re().to_double(), grp.gen.im().to_double());
                const double la = std::log(a.modulus_squared() / b.modulus_squared());
                const double lg = std::log(gen.modulus_squared());
                const long n = std::lround(la / lg);
                ComplexFloat power(1.0);
                const ComplexFloat step = (n >= 0) ? gen : ComplexFloat(1.0) / gen;
                for (long i = 0; i < std::labs(n); ++i) power *= step;
                return a == power * b;
            }
        },
        g.raw());
}

}  // namespace simkern
