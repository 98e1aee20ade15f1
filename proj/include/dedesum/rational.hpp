// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dedesum {

using Integer = mpz_class;

Integer gcd(const Integer& a, const Integer& b);

/// a mod m with the result in [0, m); requires m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

/// Exact rational number, always in lowest terms with positive denominator;
/// zero is 0/1. Equality is therefore structural. Text form is "p" or "p/q".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p" or "p/q" with an optional leading sign; the denominator
    /// must be a positive integer. Throws ValidationError on anything else.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sgn() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Integer floor() const;
    /// x - floor(x), in [0, 1).
    Rational frac() const;
    Rational abs() const { return sgn() < 0 ? -*this : *this; }
    /// Throws SingularityError on zero.
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const { return v_.get_str(); }
    /// Approximation for floating-point test oracles only; the library never
    /// computes through doubles.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dedesum
