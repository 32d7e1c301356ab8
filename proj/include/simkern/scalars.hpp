#pragma once

/*
 * The scalar tower used for matrix entries:
 *
 *   Rational          exact rationals (GMP-backed)
 *   GaussianRational  exact complex numbers with rational re/im parts
 *   PrimeFieldElement GF(p) for a word-sized prime p
 *   ComplexFloat      double-precision complex with a context tolerance
 *
 * All exact domains satisfy the field axioms bit-exactly. ComplexFloat
 * equality is tolerance-based and therefore not transitive.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "simkern/errors.hpp"
#include "simkern/rational.hpp"

namespace simkern {

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

/// Element of QQ(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
    GaussianRational(int n) : re_(n) {}                    // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational modulus_squared() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DivisionByZeroError("Gaussian-rational division by zero");
        Rational m = o.modulus_squared();
        GaussianRational num = *this * o.conj();
        re_ = num.re_ / m;
        im_ = num.im_ / m;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string s = re_.to_string();
        s += (im_.sign() < 0) ? " - " : " + ";
        s += im_.abs().to_string() + "i";
        return s;
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational pow(const GaussianRational& z, unsigned long n) {
    GaussianRational acc(1);
    GaussianRational base = z;
    unsigned long e = n;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// PrimeFieldElement
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1ULL) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1ULL;
    }
    return acc;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1ULL) == 0) {
        d >>= 1ULL;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/// Element of GF(p), p a word-sized prime checked at construction.
class PrimeFieldElement {
public:
    /// Default element is an unusable sentinel (p = 0); real elements always
    /// come from the (value, p) constructor.
    PrimeFieldElement() : v_(0), p_(0) {}

    PrimeFieldElement(long long value, std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p)) throw ArithmeticDomainError("GF modulus must be prime");
        __int128 r = static_cast<__int128>(value) % static_cast<__int128>(p);
        if (r < 0) r += static_cast<__int128>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    PrimeFieldElement conj() const { return *this; }

    PrimeFieldElement operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }

    PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
        check_domain(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
        check_domain(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
        check_domain(o);
        v_ = detail::mulmod_u64(v_, o.v_, p_);
        return *this;
    }
    PrimeFieldElement& operator/=(const PrimeFieldElement& o) {
        check_domain(o);
        if (o.v_ == 0) throw DivisionByZeroError("GF division by zero");
        v_ = detail::mulmod_u64(v_, detail::powmod_u64(o.v_, p_ - 2, p_), p_);
        return *this;
    }

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        if (a.p_ != b.p_)
            throw ArithmeticDomainError("GF comparison across different moduli");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) { return !(a == b); }

    std::string to_string() const { return std::to_string(v_); }

private:
    // Internal: skips the primality re-check.
    static PrimeFieldElement make(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElement e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

    void check_domain(const PrimeFieldElement& o) const {
        if (p_ == 0 || o.p_ == 0)
            throw ArithmeticDomainError("arithmetic on uninitialized GF element");
        if (p_ != o.p_)
            throw ArithmeticDomainError("GF arithmetic across different moduli: p=" +
                                        std::to_string(p_) + " vs p=" + std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline PrimeFieldElement pow(const PrimeFieldElement& x, unsigned long n) {
    PrimeFieldElement acc(1, x.modulus());
    PrimeFieldElement base = x;
    unsigned long e = n;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// ComplexFloat
// ---------------------------------------------------------------------------

/// Context-level tolerance policy for the float backend. A value z is
/// treated as zero iff |z| <= tau * max(1, scale), where scale is set by the
/// enclosing computation (typically the largest entry modulus of a matrix).
struct FloatPolicy {
    double tau = 1e-9;
};

inline FloatPolicy& float_policy() {
    static FloatPolicy policy;
    return policy;
}

class ComplexFloat {
public:
    ComplexFloat() : z_(0.0, 0.0) {}
    ComplexFloat(double re) : z_(re, 0.0) {}  // NOLINT: implicit by design
    ComplexFloat(int n) : z_(static_cast<double>(n), 0.0) {}  // NOLINT
    ComplexFloat(double re, double im) : z_(re, im) {}
    explicit ComplexFloat(std::complex<double> z) : z_(z) {}

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    std::complex<double> raw() const { return z_; }

    double abs() const { return std::abs(z_); }

    /// Zero test at the given context scale; monotone in tau.
    bool is_zero(double scale = 1.0) const {
        return std::abs(z_) <= float_policy().tau * std::max(1.0, scale);
    }

    ComplexFloat conj() const { return ComplexFloat(std::conj(z_)); }
    double modulus_squared() const { return std::norm(z_); }

    ComplexFloat operator-() const { return ComplexFloat(-z_); }

    ComplexFloat& operator+=(const ComplexFloat& o) { z_ += o.z_; return *this; }
    ComplexFloat& operator-=(const ComplexFloat& o) { z_ -= o.z_; return *this; }
    ComplexFloat& operator*=(const ComplexFloat& o) { z_ *= o.z_; return *this; }
    ComplexFloat& operator/=(const ComplexFloat& o) {
        if (o.z_ == std::complex<double>(0.0, 0.0))
            throw DivisionByZeroError("complex-float division by zero");
        z_ /= o.z_;
        return *this;
    }

    friend ComplexFloat operator+(ComplexFloat a, const ComplexFloat& b) { return a += b; }
    friend ComplexFloat operator-(ComplexFloat a, const ComplexFloat& b) { return a -= b; }
    friend ComplexFloat operator*(ComplexFloat a, const ComplexFloat& b) { return a *= b; }
    friend ComplexFloat operator/(ComplexFloat a, const ComplexFloat& b) { return a /= b; }

    /// Tolerance-based equality; non-transitive by nature.
    friend bool operator==(const ComplexFloat& a, const ComplexFloat& b) {
        double scale = std::max(std::abs(a.z_), std::abs(b.z_));
        return std::abs(a.z_ - b.z_) <= float_policy().tau * std::max(1.0, scale);
    }
    friend bool operator!=(const ComplexFloat& a, const ComplexFloat& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + std::to_string(z_.real()) + (z_.imag() < 0 ? "" : "+") +
               std::to_string(z_.imag()) + "i)";
    }

private:
    std::complex<double> z_;
};

inline ComplexFloat pow(const ComplexFloat& z, unsigned long n) {
    ComplexFloat acc(1.0);
    ComplexFloat base = z;
    unsigned long e = n;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Traits and generic scalar operations
// ---------------------------------------------------------------------------

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex_capable = false;  // real; conjugation is identity
    static constexpr bool is_real_ordered = true;
    static constexpr const char* domain_name = "rational";
    using real_type = Rational;
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex_capable = true;
    static constexpr bool is_real_ordered = false;
    static constexpr const char* domain_name = "gaussian-rational";
    using real_type = Rational;
};

template <>
struct scalar_traits<PrimeFieldElement> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex_capable = false;
    static constexpr bool is_real_ordered = false;
    static constexpr const char* domain_name = "gf";
    using real_type = void;
};

template <>
struct scalar_traits<ComplexFloat> {
    static constexpr bool is_exact = false;
    static constexpr bool is_complex_capable = true;
    static constexpr bool is_real_ordered = false;
    static constexpr const char* domain_name = "float";
    using real_type = double;
};

template <typename T>
concept ScalarType = requires { scalar_traits<T>::is_exact; };

template <typename T>
concept ExactScalar = ScalarType<T> && scalar_traits<T>::is_exact;

// scalar_conj: Rational is a fixed point, GF conjugation is the identity.
inline Rational scalar_conj(const Rational& x) { return x; }
inline GaussianRational scalar_conj(const GaussianRational& z) { return z.conj(); }
inline PrimeFieldElement scalar_conj(const PrimeFieldElement& x) { return x; }
inline ComplexFloat scalar_conj(const ComplexFloat& z) { return z.conj(); }

// modulus_squared: exact Rational for exact domains, double for floats,
// undefined over prime fields.
inline Rational modulus_squared(const Rational& x) { return x * x; }
inline Rational modulus_squared(const GaussianRational& z) { return z.modulus_squared(); }
inline double modulus_squared(const ComplexFloat& z) { return z.modulus_squared(); }
inline Rational modulus_squared(const PrimeFieldElement&) {
    throw UnsupportedDomainError("|z|^2 is undefined over a prime field");
}

inline bool scalar_is_zero(const Rational& x, double = 1.0) { return x.is_zero(); }
inline bool scalar_is_zero(const GaussianRational& z, double = 1.0) { return z.is_zero(); }
inline bool scalar_is_zero(const PrimeFieldElement& x, double = 1.0) { return x.is_zero(); }
inline bool scalar_is_zero(const ComplexFloat& z, double scale = 1.0) { return z.is_zero(scale); }

// zero_like / one_like: the additive and multiplicative identities of the
// same field as the argument (GF needs the modulus carried over).
inline Rational zero_like(const Rational&) { return Rational(0); }
inline GaussianRational zero_like(const GaussianRational&) { return GaussianRational(0); }
inline PrimeFieldElement zero_like(const PrimeFieldElement& x) { return {0, x.modulus()}; }
inline ComplexFloat zero_like(const ComplexFloat&) { return ComplexFloat(0.0); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline GaussianRational one_like(const GaussianRational&) { return GaussianRational(1); }
inline PrimeFieldElement one_like(const PrimeFieldElement& x) { return {1, x.modulus()}; }
inline ComplexFloat one_like(const ComplexFloat&) { return ComplexFloat(1.0); }

/// Exact sign (-1, 0, +1) of a scalar known to be real-valued.
/// Throws SymmetryError if an exact complex value has a nonzero imaginary part.
inline int sign_of_real(const Rational& x, double = 1.0) { return x.sign(); }
inline int sign_of_real(const GaussianRational& z, double = 1.0) {
    if (!z.is_real())
        throw SymmetryError("expected a real value, got " + z.to_string());
    return z.re().sign();
}
inline int sign_of_real(const ComplexFloat& z, double scale = 1.0) {
    if (z.is_zero(scale)) return 0;
    return z.re() > 0 ? 1 : -1;
}
inline int sign_of_real(const PrimeFieldElement&, double = 1.0) {
    throw UnsupportedDomainError("prime fields are unordered");
}

/// Real part as the domain's real companion type.
inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const GaussianRational& z) { return z.re(); }
inline double real_part(const ComplexFloat& z) { return z.re(); }

inline GaussianRational to_gaussian(const Rational& x) { return {x, Rational(0)}; }

}  // namespace simkern
