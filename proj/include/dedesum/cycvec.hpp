// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dedesum/rational.hpp"

namespace dedesum {

/// Element of the rational group algebra of Z/m: a length-m vector of
/// rationals under cyclic convolution. Interpreted as the function
/// lambda -> sum_j coeffs[j] * lambda^j on the m-th roots of unity;
/// convolution corresponds to pointwise multiplication of those values,
/// so root-of-unity sums can be carried out exactly, with no complex
/// arithmetic anywhere.
class CycVec {
public:
    explicit CycVec(std::size_t modulus);
    /// Unit of convolution: 1 at index `at`, 0 elsewhere.
    static CycVec delta(std::size_t modulus, std::size_t at = 0);

    std::size_t modulus() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    /// Value of the represented function at the root lambda = 1, i.e. the
    /// coefficient sum.
    Rational value_at_one() const;

    bool operator==(const CycVec& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

/// Exact representative of lambda -> 1/(1 - lambda^a) on the nontrivial m-th
/// roots of unity: the vector with v[(k*a) mod m] = -k/m, k = 0..m-1. Its
/// value at lambda = 1 is -(m-1)/2. Requires gcd(a, m) = 1, otherwise the
/// represented function would be singular at further roots.
CycVec unit_fraction_vector(std::int64_t a, std::int64_t m);

/// Cyclic convolution; both arguments must share the same modulus.
CycVec cyc_convolve(const CycVec& u, const CycVec& v);

}  // namespace dedesum
