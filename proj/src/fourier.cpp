// SPDX-License-Identifier: Apache-2.0
#include "dedesum/fourier.hpp"

#include "dedesum/errors.hpp"

namespace dedesum {

namespace {

void check_args(std::span<const std::int64_t> parts, std::int64_t a0,
                const char* who) {
    if (a0 < 1)
        throw ValidationError(std::string(who) + ": modulus must be positive");
    for (std::int64_t p : parts)
        if (gcd(Integer(static_cast<long>(p)), Integer(static_cast<long>(a0))) != 1)
            throw ValidationError(std::string(who) +
                                  ": every part must be coprime to the modulus");
}

// Convolution of the unit-fraction representatives of all parts.
CycVec product_vector(std::span<const std::int64_t> parts, std::int64_t a0) {
    CycVec g = CycVec::delta(static_cast<std::size_t>(a0));
    bool first = true;
    for (std::int64_t p : parts) {
        CycVec f = unit_fraction_vector(p, a0);
        g = first ? f : cyc_convolve(g, f);
        first = false;
    }
    return g;
}

}  // namespace

Rational fourier_dedekind(const Integer& n, std::span<const std::int64_t> parts,
                          std::int64_t a0) {
    check_args(parts, a0, "fourier_dedekind");
    CycVec g = product_vector(parts, a0);
    auto idx = static_cast<std::size_t>(
        mpz_get_ui(mod_floor(-n, Integer(static_cast<long>(a0))).get_mpz_t()));
    return g[idx] - g.value_at_one() / Rational(a0);
}

std::vector<Rational> fourier_dedekind_period(std::span<const std::int64_t> parts,
                                              std::int64_t a0) {
    check_args(parts, a0, "fourier_dedekind_period");
    CycVec g = product_vector(parts, a0);
    Rational at_one = g.value_at_one() / Rational(a0);
    auto m = static_cast<std::size_t>(a0);
    std::vector<Rational> period(m);
    for (std::size_t r = 0; r < m; ++r)
        period[r] = g[(m - r) % m] - at_one;
    return period;
}

Rational zagier_sum(std::int64_t a0, std::span<const std::int64_t> parts) {
    check_args(parts, a0, "zagier_sum");
    // (lambda^a + 1)/(lambda^a - 1) = 1 - 2/(1 - lambda^a), so each factor's
    // representative is delta_0 - 2 * unit_fraction_vector(a, a0).
    CycVec h = CycVec::delta(static_cast<std::size_t>(a0));
    for (std::int64_t p : parts) {
        CycVec f = unit_fraction_vector(p, a0);
        for (std::size_t i = 0; i < f.modulus(); ++i) f[i] *= Rational(-2);
        f[0] += Rational(1);
        h = cyc_convolve(h, f);
    }
    return h[0] - h.value_at_one() / Rational(a0);
}

Rational dedekind_via_zagier(std::int64_t a, std::int64_t b) {
    if (b < 1) throw ValidationError("dedekind_via_zagier: b must be positive");
    if (gcd(Integer(static_cast<long>(a)), Integer(static_cast<long>(b))) != 1)
        throw ValidationError("dedekind_via_zagier: a and b must be coprime");
    const std::int64_t parts[] = {a, 1};
    return Rational(-1, 4) * zagier_sum(b, parts);
}

}  // namespace dedesum
