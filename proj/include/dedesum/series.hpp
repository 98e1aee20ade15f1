// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dedesum/rational.hpp"

namespace dedesum {

/// Truncated power series with rational coefficients in a local variable t:
/// coefficients of t^0 .. t^order, everything beyond the order discarded.
class TruncSeries {
public:
    /// Zero series of the given order.
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}
    /// Series from explicit coefficients; order = coeffs.size() - 1.
    explicit TruncSeries(std::vector<Rational> coeffs);
    /// Coefficients zero-padded (or cut) to the given order.
    TruncSeries(std::vector<Rational> coeffs, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    Rational& operator[](std::size_t k) { return c_[k]; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

/// Cauchy product truncated to the common order (orders must match).
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse up to the order of a; the constant term must be
/// nonzero (SingularityError otherwise).
TruncSeries series_inv(const TruncSeries& a);

/// (1+t)^n truncated, for any integer n (negative included): coefficients
/// are the binomial coefficients binom(n, k) evaluated exactly.
TruncSeries binom_series(const Integer& n, std::size_t order);

}  // namespace dedesum
