// SPDX-License-Identifier: Apache-2.0
#include "dedesum/partition.hpp"

#include <numeric>
#include <string>

#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/series.hpp"

namespace dedesum {

PartsTuple::PartsTuple(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw ValidationError("PartsTuple: need at least one part");
    for (std::int64_t p : parts_)
        if (p < 1) throw ValidationError("PartsTuple: parts must be positive");
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            if (std::gcd(parts_[i], parts_[j]) != 1)
                throw ValidationError(
                    "PartsTuple: parts must be pairwise coprime (" +
                    std::to_string(parts_[i]) + ", " + std::to_string(parts_[j]) +
                    " are not)");
}

std::vector<std::int64_t> PartsTuple::without(std::size_t j) const {
    std::vector<std::int64_t> rest;
    rest.reserve(parts_.size() - 1);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i != j) rest.push_back(parts_[i]);
    return rest;
}

std::int64_t PartsTuple::sum() const {
    std::int64_t s = 0;
    for (std::int64_t p : parts_) s += p;
    return s;
}

Integer PartsTuple::product() const {
    Integer prod(1);
    for (std::int64_t p : parts_) prod *= static_cast<long>(p);
    return prod;
}

std::vector<Integer> partition_count_table(const PartsTuple& parts,
                                           std::int64_t n_max) {
    if (n_max < 0) return {};
    if (n_max > 100'000'000)
        throw ValidationError("partition_count: n too large for enumeration");
    std::vector<Integer> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (std::int64_t p : parts)
        for (std::int64_t i = p; i <= n_max; ++i)
            ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - p)];
    return ways;
}

Integer partition_count(const PartsTuple& parts, std::int64_t n) {
    if (n < 0) return 0;
    return partition_count_table(parts, n).back();
}

Integer interior_count(const PartsTuple& parts, std::int64_t n) {
    return partition_count(parts, n - parts.sum());
}

Rational q_value(const PartsTuple& parts, const Integer& n) {
    const std::size_t k = parts.size();  // d + 1
    const std::size_t order = k - 1;
    // psi(t) = (1+t)^{-n} * prod_i H_{a_i}(t)^{-1}; then
    // q = (1/prod a_i) * sum_{i=0}^{d} (-1)^i psi_i  (the factors' signs and
    // the (-1)^k from B_k's alternation cancel to this).
    TruncSeries psi = binom_series(-n, order);
    for (std::int64_t a : parts) {
        TruncSeries bs = binom_series(Integer(static_cast<long>(a)), order + 1);
        TruncSeries h(order);
        for (std::size_t i = 0; i <= order; ++i)
            h[i] = bs[i + 1] / Rational(a);
        psi = series_mul(psi, series_inv(h));
    }
    Rational q;
    for (std::size_t i = 0; i <= order; ++i)
        q += (i % 2 == 0) ? psi[i] : -psi[i];
    return q / Rational(parts.product());
}

std::vector<Rational> q_polynomial(const PartsTuple& parts) {
    const std::size_t d = parts.dim();
    std::vector<Rational> nodes(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        nodes[i] = q_value(parts, Integer(static_cast<long>(i)));

    // Lagrange interpolation at n = 0..d, expanded into coefficients.
    std::vector<Rational> poly(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            // basis *= (x - j)
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t] += basis[t] * Rational(-static_cast<long>(j));
                next[t + 1] += basis[t];
            }
            basis = std::move(next);
            denom *= Rational(static_cast<long>(i)) - Rational(static_cast<long>(j));
        }
        Rational scale = nodes[i] / denom;
        for (std::size_t t = 0; t < basis.size(); ++t)
            poly[t] += basis[t] * scale;
    }

    for (std::size_t n = d + 1; n <= 2 * d + 1; ++n) {
        Rational at;
        Rational x(static_cast<long>(n));
        for (std::size_t t = poly.size(); t-- > 0;) at = at * x + poly[t];
        if (at != q_value(parts, Integer(static_cast<long>(n))))
            throw InternalInconsistencyError(
                "q_polynomial: interpolation disagrees with q_value");
    }
    return poly;
}

namespace {

Rational checked_count(Rational value, const char* who) {
    if (!value.is_integer() || value.sgn() < 0)
        throw InternalInconsistencyError(std::string(who) +
                                         ": formula produced a non-count value " +
                                         value.str());
    return value;
}

}  // namespace

Rational partition_formula(const PartsTuple& parts, std::int64_t n) {
    if (n < 0) throw ValidationError("partition_formula: n must be >= 0");
    Rational total = q_value(parts, Integer(static_cast<long>(n)));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto rest = parts.without(j);
        total += fourier_dedekind(Integer(-static_cast<long>(n)), rest, parts[j]);
    }
    return checked_count(std::move(total), "partition_formula");
}

Rational interior_formula(const PartsTuple& parts, std::int64_t n) {
    if (n < 1) throw ValidationError("interior_formula: n must be >= 1");
    Rational total = q_value(parts, Integer(-static_cast<long>(n)));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto rest = parts.without(j);
        total += fourier_dedekind(Integer(static_cast<long>(n)), rest, parts[j]);
    }
    if (parts.dim() % 2 == 1) total = -total;
    return checked_count(std::move(total), "interior_formula");
}

Rational QuasiPolynomial::evaluate(std::int64_t n) const {
    Rational x(static_cast<long>(n));
    Rational value;
    for (std::size_t t = poly.size(); t-- > 0;) value = value * x + poly[t];
    for (const auto& table : tables) {
        auto m = static_cast<std::int64_t>(table.size());
        auto r = static_cast<std::size_t>(((n % m) + m) % m);
        value += table[r];
    }
    return value;
}

QuasiPolynomial emit_quasipolynomial(const PartsTuple& parts) {
    QuasiPolynomial qp;
    qp.poly = q_polynomial(parts);
    qp.tables.reserve(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto rest = parts.without(j);
        std::vector<Rational> period = fourier_dedekind_period(rest, parts[j]);
        // period[r] = sigma_r; the table wants sigma_{-r}.
        std::vector<Rational> table(period.size());
        for (std::size_t r = 0; r < period.size(); ++r)
            table[r] = period[(period.size() - r) % period.size()];
        qp.tables.push_back(std::move(table));
    }
    return qp;
}

}  // namespace dedesum
