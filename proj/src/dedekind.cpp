// SPDX-License-Identifier: Apache-2.0
#include "dedesum/dedekind.hpp"

#include <cstdint>

#include "dedesum/errors.hpp"
#include "dedesum/sawtooth.hpp"

namespace dedesum {

namespace {

// sum_{k=1}^{b-1} (2r_k - b)(2k - b) with r_k = ka mod b, skipping k with
// r_k = 0; the Dedekind sum is this over 4b^2. Word-sized fast path for the
// benchmark-scale naive evaluations.
Integer dedekind_numerator_small(std::int64_t step, std::int64_t b) {
    __int128 acc = 0;
    std::int64_t r = 0;
    for (std::int64_t k = 1; k < b; ++k) {
        r += step;
        if (r >= b) r -= b;
        if (r != 0)
            acc += static_cast<__int128>(2 * r - b) * (2 * k - b);
    }
    bool neg = acc < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(acc)
                                : static_cast<unsigned __int128>(acc);
    Integer hi(static_cast<unsigned long>(mag >> 64));
    Integer lo(static_cast<unsigned long>(mag));
    Integer result = (hi << 64) + lo;
    return neg ? Integer(-result) : result;
}

Integer dedekind_numerator_big(const Integer& step, const Integer& b) {
    Integer acc(0), r(0);
    for (Integer k(1); k < b; ++k) {
        r += step;
        if (r >= b) r -= b;
        if (r != 0) acc += (2 * r - b) * (2 * k - b);
    }
    return acc;
}

}  // namespace

Rational dedekind_naive(const Integer& a, const Integer& b) {
    if (b < 1) throw ValidationError("dedekind_naive: b must be positive");
    Integer step = mod_floor(a, b);
    Integer num = b.fits_slong_p() && step.fits_slong_p()
                      ? dedekind_numerator_small(mpz_get_si(step.get_mpz_t()),
                                                 mpz_get_si(b.get_mpz_t()))
                      : dedekind_numerator_big(step, b);
    return Rational(num, 4 * b * b);
}

Rational dedekind_fast(Integer a, Integer b) {
    if (b < 1) throw ValidationError("dedekind_fast: b must be positive");
    if (gcd(a, b) != 1)
        throw ValidationError("dedekind_fast: a and b must be coprime");
    a = mod_floor(a, b);
    Rational acc;
    bool negate = false;
    for (;;) {
        if (b == 1 || a == 0) break;  // s(a,1) = s(0,b) = 0
        if (a == 1) {
            Rational base((b - 1) * (b - 2), 12 * b);
            acc += negate ? -base : base;
            break;
        }
        Rational step = Rational(-1, 4) +
                        (Rational(a, b) + Rational(1, a * b) + Rational(b, a)) / 12;
        acc += negate ? -step : step;
        negate = !negate;
        Integer next = mod_floor(b, a);
        b = a;
        a = next;
    }
    return acc;
}

Rational rademacher_sum(const Integer& a, const Integer& b,
                        const Rational& x, const Rational& y) {
    if (b < 1) throw ValidationError("rademacher_sum: b must be positive");
    Rational acc;
    Rational ra(a);
    for (Integer k(0); k < b; ++k) {
        Rational ky = (Rational(k) + y) / Rational(b);
        acc += sawtooth(ky * ra + x) * sawtooth(ky);
    }
    return acc;
}

Rational knuth_sum(const Integer& a, const Integer& b, const Integer& n) {
    if (b < 1) throw ValidationError("knuth_sum: b must be positive");
    // Same integer-numerator trick as dedekind_naive: with r_k = (ka+n) mod b
    // the k-th term is ((r_k/b) - 1/2)((k/b) - 1/2) unless r_k = 0; the k = 0
    // term always vanishes because ((0)) = 0.
    Integer step = mod_floor(a, b);
    Integer r = mod_floor(n, b);
    Integer acc(0);
    for (Integer k(1); k < b; ++k) {
        r += step;
        if (r >= b) r -= b;
        if (r != 0) acc += (2 * r - b) * (2 * k - b);
    }
    return Rational(acc, 4 * b * b);
}

}  // namespace dedesum
