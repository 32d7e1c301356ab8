#pragma once

/*
 * Exact rational arithmetic on top of GMP's mpq_class.
 *
 * Invariants: always in lowest terms, denominator > 0. Serializes as
 * "p/q" (or just "p" when q = 1), which is also the accepted parse form.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "simkern/errors.hpp"

namespace simkern {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}             // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long long n) : v_(int64_to_mpz(n)) {}

    Rational(long long num, long long den) : v_(int64_to_mpz(num), int64_to_mpz(den)) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw ParseError("invalid rational literal: '" + s + "'");
        if (q.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
        q.canonicalize();
        return Rational(q, already_canonical_tag{});
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_), already_canonical_tag{}); }

    /// Largest integer <= this value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
        return q;
    }

    /// Nearest double approximation (used only for display / float backends).
    double to_double() const { return v_.get_d(); }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(-v_, already_canonical_tag{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    struct already_canonical_tag {};
    Rational(const mpq_class& q, already_canonical_tag) : v_(q) {}
    Rational(mpq_class&& q, already_canonical_tag) : v_(std::move(q)) {}

    static mpz_class int64_to_mpz(long long n) {
        mpz_class z;
        // mpz_class has no long long ctor on LP64-unfriendly platforms; go via string
        // only when the value does not fit in a long.
        if (n >= static_cast<long long>(std::numeric_limits<long>::min()) &&
            n <= static_cast<long long>(std::numeric_limits<long>::max())) {
            z = static_cast<long>(n);
        } else {
            z.set_str(std::to_string(n), 10);
        }
        return z;
    }

    mpq_class v_;
};

inline Rational pow(const Rational& x, unsigned long n) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), n);
    return Rational(num, den);
}

}  // namespace simkern
