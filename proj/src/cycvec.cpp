// SPDX-License-Identifier: Apache-2.0
#include "dedesum/cycvec.hpp"

#include "dedesum/errors.hpp"

namespace dedesum {

CycVec::CycVec(std::size_t modulus) : c_(modulus) {
    if (modulus == 0) throw ValidationError("CycVec: modulus must be >= 1");
}

CycVec CycVec::delta(std::size_t modulus, std::size_t at) {
    CycVec d(modulus);
    d.c_.at(at) = Rational(1);
    return d;
}

Rational CycVec::value_at_one() const {
    Rational s;
    for (const Rational& x : c_) s += x;
    return s;
}

CycVec unit_fraction_vector(std::int64_t a, std::int64_t m) {
    if (m < 1) throw ValidationError("unit_fraction_vector: modulus must be >= 1");
    Integer mz(static_cast<long>(m));
    if (gcd(Integer(static_cast<long>(a)), mz) != 1)
        throw ValidationError("unit_fraction_vector: gcd(a, m) must be 1");
    CycVec v(static_cast<std::size_t>(m));
    std::int64_t step = static_cast<std::int64_t>(mpz_get_si(mod_floor(a, mz).get_mpz_t()));
    std::int64_t idx = 0;
    for (std::int64_t k = 0; k < m; ++k) {
        v[static_cast<std::size_t>(idx)] = Rational(-k, m);
        idx += step;
        if (idx >= m) idx -= m;
    }
    return v;
}

namespace {

// Scale a vector of rationals to a common denominator, returning the integer
// numerators. Keeps the convolution itself in integer arithmetic.
Integer scale_common(const CycVec& u, std::vector<Integer>& out) {
    Integer den(1);
    for (std::size_t i = 0; i < u.modulus(); ++i) {
        Integer d = u[i].den();
        den = den / gcd(den, d) * d;
    }
    out.resize(u.modulus());
    for (std::size_t i = 0; i < u.modulus(); ++i)
        out[i] = u[i].num() * (den / u[i].den());
    return den;
}

}  // namespace

CycVec cyc_convolve(const CycVec& u, const CycVec& v) {
    const std::size_t m = u.modulus();
    if (v.modulus() != m)
        throw ValidationError("cyc_convolve: modulus mismatch");
    std::vector<Integer> un, vn;
    Integer ud = scale_common(u, un);
    Integer vd = scale_common(v, vn);
    std::vector<Integer> w(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (un[i] == 0) continue;
        std::size_t k = i;
        for (std::size_t j = 0; j < m; ++j) {
            if (vn[j] != 0)
                mpz_addmul(w[k].get_mpz_t(), un[i].get_mpz_t(), vn[j].get_mpz_t());
            if (++k == m) k = 0;
        }
    }
    CycVec r(m);
    Integer den = ud * vd;
    for (std::size_t i = 0; i < m; ++i) r[i] = Rational(w[i], den);
    return r;
}

}  // namespace dedesum
