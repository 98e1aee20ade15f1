// SPDX-License-Identifier: Apache-2.0
#include "dedesum/series.hpp"

#include "dedesum/errors.hpp"

namespace dedesum {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ValidationError("TruncSeries: need at least the constant term");
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw ValidationError("series_mul: order mismatch");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= b.order(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncSeries series_inv(const TruncSeries& a) {
    if (a[0].is_zero())
        throw SingularityError("series_inv: constant term is zero");
    TruncSeries b(a.order());
    Rational inv0 = a[0].inverse();
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational s;
        for (std::size_t k = 1; k <= n; ++k) s += a[k] * b[n - k];
        b[n] = -s * inv0;
    }
    return b;
}

TruncSeries binom_series(const Integer& n, std::size_t order) {
    TruncSeries r(order);
    Rational c(1);
    r[0] = c;
    for (std::size_t k = 1; k <= order; ++k) {
        c *= Rational(n - Integer(static_cast<long>(k) - 1),
                      Integer(static_cast<long>(k)));
        r[k] = c;
    }
    return r;
}

}  // namespace dedesum
