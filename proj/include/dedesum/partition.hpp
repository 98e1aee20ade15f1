// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dedesum/rational.hpp"

namespace dedesum {

/// Validated tuple (a_0,...,a_d) of pairwise-coprime positive integers.
/// Order is preserved; repeated 1s are allowed (gcd(1,1) = 1).
class PartsTuple {
public:
    explicit PartsTuple(std::vector<std::int64_t> parts);

    std::size_t size() const { return parts_.size(); }
    /// d, so that the tuple has d+1 entries.
    std::size_t dim() const { return parts_.size() - 1; }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<std::int64_t>& values() const { return parts_; }
    std::vector<std::int64_t> without(std::size_t j) const;

    std::int64_t sum() const;
    Integer product() const;

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

private:
    std::vector<std::int64_t> parts_;
};

/// Number of ways to write n as a nonnegative integer combination of the
/// parts: dynamic programming over exact big integers, O((d+1) n) time.
/// Returns 0 for n < 0. This is the brute-force oracle; it shares no code
/// with the formula side.
Integer partition_count(const PartsTuple& parts, std::int64_t n);

/// All counts 0..n_max in one DP pass (entry [n] = partition_count(parts, n)).
std::vector<Integer> partition_count_table(const PartsTuple& parts,
                                           std::int64_t n_max);

/// Representations with every coefficient >= 1; equals
/// partition_count(parts, n - sum(parts)).
Integer interior_count(const PartsTuple& parts, std::int64_t n);

// The polynomial part q(a_0,...,a_d, n) of the counting function: with
// f(z) = z^{-n} prod_i 1/(1 - z^{a_i}) and B_k the coefficient of
// (z-1)^{-k} in its Laurent expansion about z = 1,
//
//   q = sum_{k=1}^{d+1} (-1)^k B_k.
//
// Substituting z = 1+t, each factor is 1/(1-(1+t)^a) = -1/(a t) * H_a(t)^{-1}
// with H_a(t) = sum_k binom(a, k+1)/a t^k, so B_k falls out of one truncated
// series product. Everything is polynomial in n; negative n is meaningful.

/// q(parts, n), exact.
Rational q_value(const PartsTuple& parts, const Integer& n);

/// Coefficients (constant first) of the degree-d polynomial in n agreeing
/// with q_value at every integer; interpolated at n = 0..d and re-checked
/// against q_value at d+1 further points.
std::vector<Rational> q_polynomial(const PartsTuple& parts);

/// The counting formula: q(parts, n) + sum_j sigma_{-n}(parts minus a_j; a_j).
/// Requires n >= 0; the result provably equals partition_count, and a
/// non-integer or negative value raises InternalInconsistencyError.
Rational partition_formula(const PartsTuple& parts, std::int64_t n);

/// Interior counterpart for n >= 1:
/// (-1)^d (q(parts, -n) + sum_j sigma_{+n}(parts minus a_j; a_j)).
Rational interior_formula(const PartsTuple& parts, std::int64_t n);

/// Counting quasipolynomial: polynomial part plus one periodic table per
/// part, entry [j][r] = sigma_{-r}(parts minus a_j; a_j) for r = 0..a_j-1.
struct QuasiPolynomial {
    std::vector<Rational> poly;                 // coefficients of n^0..n^d
    std::vector<std::vector<Rational>> tables;  // tables[j] has length a_j

    /// poly(n) + sum_j tables[j][n mod a_j].
    Rational evaluate(std::int64_t n) const;
};

QuasiPolynomial emit_quasipolynomial(const PartsTuple& parts);

}  // namespace dedesum
