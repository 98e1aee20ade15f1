// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dedesum/cycvec.hpp"
#include "dedesum/rational.hpp"

namespace dedesum {

// Fourier-Dedekind sums
//
//   sigma_n(a_1,...,a_d; a_0) = (1/a_0) sum_{lambda^{a_0}=1, lambda != 1}
//                               lambda^n / prod_i (1 - lambda^{a_i})
//
// evaluated exactly: each factor 1/(1 - lambda^{a_i}) has a CycVec
// representative g_i, the product is their cyclic convolution g, and by
// orthogonality of characters the average over ALL a_0-th roots of
// lambda^n * g(lambda) is the single coefficient g[(-n) mod a_0]. The
// lambda = 1 term, g(1)/a_0, is then subtracted algebraically; nothing is
// ever divided by zero. Requires gcd(a_i, a_0) = 1 for every i.

/// sigma_n(parts; a0). The parts list may be empty (d = 0), in which case
/// sigma_n = [a0 | n] - 1/a0. Periodic in n with period a0.
Rational fourier_dedekind(const Integer& n, std::span<const std::int64_t> parts,
                          std::int64_t a0);

/// One full period: entry [r] is sigma_r(parts; a0) for r = 0..a0-1. Shares
/// the single convolution across all residues.
std::vector<Rational> fourier_dedekind_period(std::span<const std::int64_t> parts,
                                              std::int64_t a0);

/// Zagier's higher-dimensional Dedekind sum
///   s(a0; a1,...,ad) = (1/a0) sum_{lambda^{a0}=1 != lambda}
///                      prod_j (lambda^{a_j}+1)/(lambda^{a_j}-1),
/// computed through the representative delta_0 - 2*unit_fraction_vector of
/// each factor. Vanishes for odd d. Requires gcd(a_j, a0) = 1.
Rational zagier_sum(std::int64_t a0, std::span<const std::int64_t> parts);

/// Classical Dedekind sum through the cotangent identity
/// s(a,b) = -(1/4) s(b; a, 1); requires gcd(a,b) = 1.
Rational dedekind_via_zagier(std::int64_t a, std::int64_t b);

inline Rational fourier_dedekind(const Integer& n,
                                 std::initializer_list<std::int64_t> parts,
                                 std::int64_t a0) {
    return fourier_dedekind(
        n, std::span<const std::int64_t>(parts.begin(), parts.size()), a0);
}

inline Rational zagier_sum(std::int64_t a0,
                           std::initializer_list<std::int64_t> parts) {
    return zagier_sum(a0,
                      std::span<const std::int64_t>(parts.begin(), parts.size()));
}

}  // namespace dedesum
