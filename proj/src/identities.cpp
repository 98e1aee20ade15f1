// SPDX-License-Identifier: Apache-2.0
#include "dedesum/identities.hpp"

#include <numeric>

#include "dedesum/dedekind.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/sawtooth.hpp"

namespace dedesum {

namespace {

void require_coprime_positive(const Integer& a, const Integer& b, const char* who) {
    if (a < 1 || b < 1)
        throw ValidationError(std::string(who) + ": arguments must be positive");
    if (gcd(a, b) != 1)
        throw ValidationError(std::string(who) + ": arguments must be coprime");
}

}  // namespace

Rational dedekind_residual(const Integer& a, const Integer& b) {
    require_coprime_positive(a, b, "dedekind_residual");
    Rational rhs = Rational(-1, 4) +
                   (Rational(a, b) + Rational(1, a * b) + Rational(b, a)) / 12;
    return dedekind_fast(a, b) + dedekind_fast(b, a) - rhs;
}

Rational rademacher_residual(const Integer& a, const Integer& b,
                             const Rational& x, const Rational& y) {
    require_coprime_positive(a, b, "rademacher_residual");
    if (x.is_integer() && y.is_integer())
        throw ValidationError(
            "rademacher_residual: x and y must not both be integers "
            "(that case is dedekind_residual)");
    Rational lhs = rademacher_sum(a, b, x, y) + rademacher_sum(b, a, y, x);
    Rational ra(a), rb(b);
    Rational rhs = sawtooth(x) * sawtooth(y) +
                   (ra / rb * bernoulli2(y) +
                    bernoulli2(ra * y + rb * x) / (ra * rb) +
                    rb / ra * bernoulli2(x)) /
                       2;
    return lhs - rhs;
}

Rational gessel_residual(std::int64_t p, std::int64_t q, const Integer& n) {
    if (p < 1 || q < 1)
        throw ValidationError("gessel_residual: p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw ValidationError("gessel_residual: p and q must be coprime");
    const std::int64_t pq1[] = {q, 1};
    const std::int64_t qp1[] = {p, 1};
    Rational lhs = fourier_dedekind(n, pq1, p) + fourier_dedekind(n, qp1, q);
    Rational rp(p), rq(q), rn(n);
    Rational rhs = -rn * rn / (2 * rp * rq) +
                   rn / 2 * (rp.inverse() + rq.inverse() + (rp * rq).inverse()) -
                   (rp.inverse() + rq.inverse() + 1) / 4 -
                   (rp / rq + (rp * rq).inverse() + rq / rp) / 12;
    return lhs - rhs;
}

Rational general_residual(const PartsTuple& parts, const Integer& n) {
    Rational total = q_value(parts, -n);
    for (std::size_t j = 0; j < parts.size(); ++j)
        total += fourier_dedekind(n, parts.without(j), parts[j]);
    return total;
}

Rational zagier_residual(const PartsTuple& parts) {
    Rational total = q_value(parts, 0) - 1;
    for (std::size_t j = 0; j < parts.size(); ++j)
        total += fourier_dedekind(0, parts.without(j), parts[j]);
    return total;
}

Rational raddedsum_residual(const Integer& a, std::int64_t b, const Integer& n) {
    if (b < 1) throw ValidationError("raddedsum_residual: b must be positive");
    Integer bz(static_cast<long>(b));
    if (gcd(a, bz) != 1)
        throw ValidationError("raddedsum_residual: a and b must be coprime");
    Rational lhs = knuth_sum(a, bz, n);
    // The sum depends on a only through a mod b, which keeps the modulus of
    // the Fourier-Dedekind side word-sized even for big a.
    auto ar = static_cast<std::int64_t>(mpz_get_si(mod_floor(a, bz).get_mpz_t()));
    const std::int64_t ps[] = {ar, 1};
    Integer ainv(0);
    if (b > 1) mpz_invert(ainv.get_mpz_t(), Integer(ar).get_mpz_t(), bz.get_mpz_t());
    Rational rhs = -fourier_dedekind(-n, ps, b) - frac(Rational(n, bz)) / 2 -
                   sawtooth(Rational(ainv * n, bz)) / 2 + Rational(1, 4) -
                   Rational(1, 4 * bz);
    return lhs - rhs;
}

std::string law_name(Law law) {
    switch (law) {
        case Law::Dedekind: return "DEDEKIND";
        case Law::Rademacher: return "RADEMACHER";
        case Law::Gessel: return "GESSEL";
        case Law::General: return "GENERAL";
        case Law::Zagier: return "ZAGIER";
        case Law::Raddedsum: return "RADDEDSUM";
    }
    return "?";
}

nlohmann::json ResidualReport::to_json() const {
    nlohmann::json j{{"law", law_name(law)},
                     {"args", args},
                     {"residual", residual.str()},
                     {"holds", holds}};
    if (in_hypothesis) j["in_hypothesis"] = *in_hypothesis;
    return j;
}

namespace {

ResidualReport make_report(Law law, nlohmann::json args, Rational residual,
                           std::optional<bool> in_hypothesis = std::nullopt) {
    ResidualReport r;
    r.law = law;
    r.args = std::move(args);
    r.holds = residual.is_zero();
    r.residual = std::move(residual);
    r.in_hypothesis = in_hypothesis;
    return r;
}

}  // namespace

ResidualReport report_dedekind(const Integer& a, const Integer& b) {
    return make_report(Law::Dedekind,
                       {{"a", a.get_str()}, {"b", b.get_str()}},
                       dedekind_residual(a, b));
}

ResidualReport report_rademacher(const Integer& a, const Integer& b,
                                 const Rational& x, const Rational& y) {
    return make_report(Law::Rademacher,
                       {{"a", a.get_str()},
                        {"b", b.get_str()},
                        {"x", x.str()},
                        {"y", y.str()}},
                       rademacher_residual(a, b, x, y));
}

ResidualReport report_gessel(std::int64_t p, std::int64_t q, const Integer& n) {
    bool window = n >= 1 && n <= Integer(static_cast<long>(p + q));
    return make_report(Law::Gessel,
                       {{"p", p}, {"q", q}, {"n", n.get_str()}},
                       gessel_residual(p, q, n), window);
}

ResidualReport report_general(const PartsTuple& parts, const Integer& n) {
    bool window = n >= 1 && n < Integer(static_cast<long>(parts.sum()));
    return make_report(Law::General,
                       {{"parts", parts.values()}, {"n", n.get_str()}},
                       general_residual(parts, n), window);
}

ResidualReport report_zagier(const PartsTuple& parts) {
    return make_report(Law::Zagier, {{"parts", parts.values()}},
                       zagier_residual(parts));
}

ResidualReport report_raddedsum(const Integer& a, std::int64_t b, const Integer& n) {
    return make_report(Law::Raddedsum,
                       {{"a", a.get_str()}, {"b", b}, {"n", n.get_str()}},
                       raddedsum_residual(a, b, n));
}

}  // namespace dedesum
