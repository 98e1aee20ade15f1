// SPDX-License-Identifier: Apache-2.0
#include "dedesum/rational.hpp"

#include <cctype>
#include <ostream>

#include "dedesum/errors.hpp"

namespace dedesum {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m <= 0) throw ValidationError("mod_floor: modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw ValidationError("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ValidationError("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw ValidationError("Rational::parse: malformed rational '" +
                              std::string(text) + "' (expected p or p/q)");
    };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto digits = [&](std::string_view part) {
        if (part.empty()) fail();
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    };
    std::string_view numpart = s, denpart = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        numpart = s.substr(0, slash);
        denpart = s.substr(slash + 1);
    }
    digits(numpart);
    digits(denpart);
    Integer num(std::string(numpart), 10);
    Integer den(std::string(denpart), 10);
    if (den == 0) fail();
    if (neg) num = -num;
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::inverse() const {
    if (is_zero()) throw SingularityError("Rational::inverse: zero has no inverse");
    return Rational(den(), num());
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularityError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace dedesum
