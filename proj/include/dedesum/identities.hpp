// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "dedesum/partition.hpp"
#include "dedesum/rational.hpp"

namespace dedesum {

// Residual evaluators: each returns LHS - RHS of one reciprocity law, as an
// exact rational. Under the law's hypotheses the residual is exactly zero;
// returning the value rather than a boolean keeps the magnitude around for
// debugging when something drifts.

/// s(a,b) + s(b,a) + 1/4 - (a/b + 1/(ab) + b/a)/12. Requires a, b >= 1 coprime.
Rational dedekind_residual(const Integer& a, const Integer& b);

/// s(a,b;x,y) + s(b,a;y,x) - ((x))((y))
///   - (1/2)[(a/b) B2(y) + (1/(ab)) B2(ay+bx) + (b/a) B2(x)].
/// Requires a, b >= 1 coprime and x, y not both integers (both-integer input
/// is the classical case; use dedekind_residual).
Rational rademacher_residual(const Integer& a, const Integer& b,
                             const Rational& x, const Rational& y);

/// sigma_n(q,1; p) + sigma_n(p,1; q) minus the quadratic
///   -n^2/(2pq) + (n/2)(1/p + 1/q + 1/pq) - (1/4)(1/p + 1/q + 1)
///   - (1/12)(p/q + 1/pq + q/p).
/// Zero whenever 1 <= n <= p+q; evaluating outside that window is legal and
/// the residual is then informative, not an error.
Rational gessel_residual(std::int64_t p, std::int64_t q, const Integer& n);

/// sum_j sigma_n(parts minus a_j; a_j) + q(parts, -n); zero for
/// 0 < n < sum(parts). Out-of-window n is legal.
Rational general_residual(const PartsTuple& parts, const Integer& n);

/// sum_j sigma_0(parts minus a_j; a_j) - 1 + q(parts, 0); zero always.
Rational zagier_residual(const PartsTuple& parts);

/// knuth_sum(a,b,n) minus the closed form
///   -sigma_{-n}(a,1; b) - (1/2){n/b} - (1/2)((a^{-1}n/b)) + 1/4 - 1/(4b),
/// where a^{-1} is taken mod b; zero always. Requires gcd(a,b) = 1.
Rational raddedsum_residual(const Integer& a, std::int64_t b, const Integer& n);

enum class Law { Dedekind, Rademacher, Gessel, General, Zagier, Raddedsum };

std::string law_name(Law law);

/// One residual evaluation, packaged for reporting. `holds` is true exactly
/// when the residual is zero; for the laws with an n-window,
/// `in_hypothesis` records whether the inputs satisfied it.
struct ResidualReport {
    Law law;
    nlohmann::json args;
    Rational residual;
    bool holds = false;
    std::optional<bool> in_hypothesis;

    nlohmann::json to_json() const;
};

ResidualReport report_dedekind(const Integer& a, const Integer& b);
ResidualReport report_rademacher(const Integer& a, const Integer& b,
                                 const Rational& x, const Rational& y);
ResidualReport report_gessel(std::int64_t p, std::int64_t q, const Integer& n);
ResidualReport report_general(const PartsTuple& parts, const Integer& n);
ResidualReport report_zagier(const PartsTuple& parts);
ResidualReport report_raddedsum(const Integer& a, std::int64_t b, const Integer& n);

}  // namespace dedesum
