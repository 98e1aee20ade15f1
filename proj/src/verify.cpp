// SPDX-License-Identifier: Apache-2.0
#include "dedesum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "dedesum/cone2d.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/identities.hpp"
#include "dedesum/partition.hpp"

namespace dedesum {
namespace verify {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw ValidationError("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r < limit) return r % n;
    }
}

std::int64_t uniform_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Integer random_bits(std::mt19937_64& rng, unsigned bits) {
    Integer n(0);
    unsigned filled = 0;
    while (filled < bits) {
        n <<= 64;
        n += Integer(static_cast<unsigned long>(rng()));
        filled += 64;
    }
    n >>= filled - bits;          // keep exactly `bits` low bits
    mpz_setbit(n.get_mpz_t(), bits - 1);  // force the top bit
    return n;
}

namespace {

bool pairwise_coprime(const std::vector<std::int64_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (std::gcd(t[i], t[j]) != 1) return false;
    return true;
}

void record_failure(SuiteResult& r, const std::string& what) {
    if (r.failures.size() < 20) r.failures.push_back(what);
    else if (r.failures.size() == 20) r.failures.push_back("... (more suppressed)");
}

std::string tuple_str(const std::vector<std::int64_t>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_coprime_tuples(
    std::int64_t max_part, std::size_t min_len, std::size_t max_len) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t from) -> void {
        if (cur.size() >= min_len) out.push_back(cur);
        if (cur.size() == max_len) return;
        for (std::int64_t v = from; v <= max_part; ++v) {
            bool ok = true;
            for (std::int64_t p : cur)
                if (std::gcd(p, v) != 1) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<std::int64_t>> sample_coprime_tuples(
    std::mt19937_64& rng, std::int64_t max_part, std::size_t max_len,
    std::size_t count) {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> out;
    std::size_t len = 1;
    for (std::size_t attempts = 0; out.size() < count && attempts < 1000000;
         ++attempts) {
        std::vector<std::int64_t> t;
        for (std::size_t i = 0; i < len; ++i)
            t.push_back(uniform_range(rng, 1, max_part));
        if (pairwise_coprime(t) && seen.insert(t).second) out.push_back(t);
        len = len % max_len + 1;
    }
    return out;
}

SuiteResult verify_dedekind(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 200;
    SuiteResult r;
    r.suite = "dedekind";
    r.seed = opts.seed;
    for (std::int64_t b = 2; b <= max; ++b)
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            ++r.checked;
            Rational res = dedekind_residual(static_cast<long>(a), static_cast<long>(b));
            if (!res.is_zero())
                record_failure(r, "dedekind_residual(" + std::to_string(a) + "," +
                                      std::to_string(b) + ") = " + res.str());
        }
    return r;
}

SuiteResult verify_rademacher(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 60;
    SuiteResult r;
    r.suite = "rademacher";
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    while (r.checked < 1000) {
        std::int64_t a = uniform_range(rng, 1, max);
        std::int64_t b = uniform_range(rng, 1, max);
        if (std::gcd(a, b) != 1) continue;
        std::int64_t xd = uniform_range(rng, 1, 20);
        std::int64_t yd = uniform_range(rng, 1, 20);
        Rational x(uniform_range(rng, 0, xd - 1), xd);
        Rational y(uniform_range(rng, 0, yd - 1), yd);
        if (x.is_integer() && y.is_integer()) continue;
        ++r.checked;
        Rational res = rademacher_residual(static_cast<long>(a),
                                           static_cast<long>(b), x, y);
        if (!res.is_zero())
            record_failure(r, "rademacher_residual(" + std::to_string(a) + "," +
                                  std::to_string(b) + ";" + x.str() + "," +
                                  y.str() + ") = " + res.str());
    }
    return r;
}

SuiteResult verify_gessel(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 40;
    SuiteResult r;
    r.suite = "gessel";
    r.seed = opts.seed;
    for (std::int64_t p = 1; p <= max; ++p)
        for (std::int64_t q = p; q <= max; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t n = 1; n <= p + q; ++n) {
                ++r.checked;
                Rational res = gessel_residual(p, q, static_cast<long>(n));
                if (!res.is_zero())
                    record_failure(r, "gessel_residual(" + std::to_string(p) + "," +
                                          std::to_string(q) + "," + std::to_string(n) +
                                          ") = " + res.str());
            }
        }
    return r;
}

SuiteResult verify_general(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 15;
    SuiteResult r;
    r.suite = "general";
    r.seed = opts.seed;
    for (const auto& t : enumerate_coprime_tuples(max, 1, 4)) {
        PartsTuple parts(t);
        for (std::int64_t n = 1; n < parts.sum(); ++n) {
            ++r.checked;
            Rational res = general_residual(parts, static_cast<long>(n));
            if (!res.is_zero())
                record_failure(r, "general_residual(" + tuple_str(t) + "," +
                                      std::to_string(n) + ") = " + res.str());
        }
    }
    return r;
}

SuiteResult verify_zagier(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 15;
    SuiteResult r;
    r.suite = "zagier";
    r.seed = opts.seed;
    for (const auto& t : enumerate_coprime_tuples(max, 1, 5)) {
        PartsTuple parts(t);
        ++r.checked;
        Rational res = zagier_residual(parts);
        if (!res.is_zero())
            record_failure(r, "zagier_residual" + tuple_str(t) + " = " + res.str());
        // Odd d: the higher-dimensional sum itself must vanish, whichever
        // entry plays the modulus.
        if (parts.dim() % 2 == 1) {
            for (std::size_t j = 0; j < parts.size(); ++j) {
                ++r.checked;
                Rational zs = zagier_sum(parts[j], parts.without(j));
                if (!zs.is_zero())
                    record_failure(r, "zagier_sum(" + std::to_string(parts[j]) + ";" +
                                          tuple_str(parts.without(j)) +
                                          ") = " + zs.str() + " (odd d)");
            }
        }
    }
    return r;
}

SuiteResult verify_raddedsum(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 60;
    SuiteResult r;
    r.suite = "raddedsum";
    r.seed = opts.seed;
    for (std::int64_t a = 1; a <= max; ++a)
        for (std::int64_t b = 1; b <= max; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t n = -20; n <= 2 * b; ++n) {
                ++r.checked;
                Rational res = raddedsum_residual(static_cast<long>(a), b,
                                                  static_cast<long>(n));
                if (!res.is_zero())
                    record_failure(r, "raddedsum_residual(" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(n) +
                                          ") = " + res.str());
            }
        }
    return r;
}

namespace {

// Tuple universe shared by the counting-formula suites: a fixed interesting
// batch plus seeded random pairwise-coprime tuples, >= 200 total.
std::vector<std::vector<std::int64_t>> counting_tuples(std::int64_t max_part,
                                                       std::uint64_t seed) {
    std::vector<std::vector<std::int64_t>> tuples = {
        {1}, {2}, {7}, {1, 1}, {1, 2}, {2, 3}, {1, 2, 3}, {3, 5, 7},
        {2, 3, 5, 7}, {1, 1, 1, 1}, {29, 30}, {20, 21}, {6, 35}, {9, 10, 11},
    };
    for (auto& t : tuples)
        for (auto& p : t) p = std::min<std::int64_t>(p, max_part);
    std::erase_if(tuples, [](const auto& t) { return !pairwise_coprime(t); });
    std::set<std::vector<std::int64_t>> seen(tuples.begin(), tuples.end());
    std::mt19937_64 rng(seed);
    std::size_t len = 1;
    // Attempt cap: with a tiny max_part there may be fewer than 200 distinct
    // tuples in the whole universe.
    for (std::size_t attempts = 0; tuples.size() < 200 && attempts < 1000000;
         ++attempts) {
        std::vector<std::int64_t> t;
        for (std::size_t i = 0; i < len; ++i)
            t.push_back(uniform_range(rng, 1, max_part));
        len = len % 4 + 1;
        if (pairwise_coprime(t) && seen.insert(t).second) tuples.push_back(t);
    }
    return tuples;
}

}  // namespace

SuiteResult verify_main(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 30;
    const std::int64_t n_max = 500;
    SuiteResult r;
    r.suite = "main";
    r.seed = opts.seed;
    for (const auto& t : counting_tuples(max, opts.seed)) {
        PartsTuple parts(t);
        auto counts = partition_count_table(parts, n_max);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            ++r.checked;
            Rational formula = partition_formula(parts, n);
            if (formula != Rational(counts[static_cast<std::size_t>(n)]))
                record_failure(r, "partition_formula" + tuple_str(t) + " at n=" +
                                      std::to_string(n) + ": " + formula.str() +
                                      " != " +
                                      counts[static_cast<std::size_t>(n)].get_str());
        }
    }
    return r;
}

SuiteResult verify_ehrhart(const SuiteOptions& opts) {
    std::int64_t max = opts.max > 0 ? opts.max : 30;
    const std::int64_t n_max = 500;
    SuiteResult r;
    r.suite = "ehrhart";
    r.seed = opts.seed;
    for (const auto& t : counting_tuples(max, opts.seed)) {
        PartsTuple parts(t);
        auto counts = partition_count_table(parts, n_max);
        const std::int64_t shift = parts.sum();
        for (std::int64_t n = 1; n <= n_max; ++n) {
            ++r.checked;
            Integer expected = n - shift < 0
                                   ? Integer(0)
                                   : counts[static_cast<std::size_t>(n - shift)];
            Rational formula = interior_formula(parts, n);
            if (formula != Rational(expected))
                record_failure(r, "interior_formula" + tuple_str(t) + " at n=" +
                                      std::to_string(n) + ": " + formula.str() +
                                      " != " + expected.get_str());
            else if (n < shift && !formula.is_zero())
                record_failure(r, "interior_formula" + tuple_str(t) + " at n=" +
                                      std::to_string(n) +
                                      " must vanish below the part sum");
        }
    }
    return r;
}

SuiteResult verify_cone2d(const SuiteOptions& opts) {
    std::int64_t max_index = opts.max > 0 ? opts.max : 10000;
    SuiteResult r;
    r.suite = "cone2d";
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);

    std::vector<cone2d::Cone2> cones;
    cones.emplace_back(cone2d::Vec2(1, 0), cone2d::Vec2(0, 1));
    cones.emplace_back(cone2d::Vec2(1, 0), cone2d::Vec2(1, 2));
    cones.emplace_back(cone2d::Vec2(3, 1), cone2d::Vec2(1, 4));
    cones.emplace_back(cone2d::Vec2(0, -1), cone2d::Vec2(-1, 3));
    while (cones.size() < 200) {
        cone2d::Vec2 u(static_cast<long>(uniform_range(rng, -99, 99)),
                       static_cast<long>(uniform_range(rng, -99, 99)));
        cone2d::Vec2 w(static_cast<long>(uniform_range(rng, -99, 99)),
                       static_cast<long>(uniform_range(rng, -99, 99)));
        if (u.is_zero() || w.is_zero()) continue;
        Integer g = gcd(u.x, u.y);
        u.x /= g; u.y /= g;
        g = gcd(w.x, w.y);
        w.x /= g; w.y /= g;
        Integer d = cone2d::det(u, w);
        if (d == 0 || abs(d) > max_index) continue;
        cones.emplace_back(u, w);
    }

    for (const auto& c : cones) {
        ++r.checked;
        Integer index = cone2d::cone_index(c);
        auto terms = cone2d::decompose(c);
        std::ostringstream id;
        id << "cone (" << c.u().x << "," << c.u().y << "),(" << c.w().x << ","
           << c.w().y << ")";
        for (const auto& term : terms)
            if (abs(cone2d::det(term.b1, term.b2)) != 1)
                record_failure(r, id.str() + ": non-unimodular term");
        double bound = 4.0 * (1.0 + std::log2(index.get_d()));
        if (static_cast<double>(terms.size()) > bound)
            record_failure(r, id.str() + ": " + std::to_string(terms.size()) +
                                  " terms exceeds 4(1+log2 index)");
        if (!cone2d::series_verify(terms, c, 8))
            record_failure(r, id.str() + ": series comparison failed");
    }
    return r;
}

std::vector<SuiteResult> verify_all(const SuiteOptions& opts) {
    return {verify_dedekind(opts), verify_rademacher(opts), verify_gessel(opts),
            verify_general(opts),  verify_zagier(opts),     verify_raddedsum(opts),
            verify_main(opts),     verify_ehrhart(opts),    verify_cone2d(opts)};
}

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const SuiteOptions& opts) {
    if (name == "dedekind") return {verify_dedekind(opts)};
    if (name == "rademacher") return {verify_rademacher(opts)};
    if (name == "gessel") return {verify_gessel(opts)};
    if (name == "general") return {verify_general(opts)};
    if (name == "zagier") return {verify_zagier(opts)};
    if (name == "raddedsum") return {verify_raddedsum(opts)};
    if (name == "main") return {verify_main(opts)};
    if (name == "ehrhart") return {verify_ehrhart(opts)};
    if (name == "cone2d") return {verify_cone2d(opts)};
    if (name == "all") return verify_all(opts);
    throw ValidationError("unknown verification suite '" + name + "'");
}

}  // namespace verify
}  // namespace dedesum
