// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "dedesum/dedekind.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/partition.hpp"
#include "dedesum/verify.hpp"

using namespace dedesum;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Direct complex summation over roots of unity; float oracle only.
double fourier_float(long n, const std::vector<std::int64_t>& parts, long a0) {
    const double pi = 3.14159265358979323846;
    std::complex<double> acc = 0;
    for (long k = 1; k < a0; ++k) {
        std::complex<double> lam = std::polar(1.0, 2 * pi * k / a0);
        std::complex<double> term = std::pow(lam, static_cast<double>(n));
        for (std::int64_t a : parts)
            term /= 1.0 - std::pow(lam, static_cast<double>(a));
        acc += term;
    }
    return (acc / static_cast<double>(a0)).real();
}

// Cotangent-product form of the higher-dimensional sum; float oracle.
double zagier_float(long a0, const std::vector<std::int64_t>& parts) {
    const double pi = 3.14159265358979323846;
    double sign = (parts.size() / 2) % 2 == 0 ? 1.0 : -1.0;
    if (parts.size() % 2 == 1) return 0.0;
    double acc = 0;
    for (long k = 1; k < a0; ++k) {
        double term = 1;
        for (std::int64_t a : parts)
            term /= std::tan(pi * static_cast<double>(k * a) / a0);
        acc += term;
    }
    return sign * acc / a0;
}

}  // namespace

TEST_CASE("fourier_dedekind spot values") {
    const std::vector<std::int64_t> one{1};
    CHECK(fourier_dedekind(0, one, 2) == R(1, 4));
    CHECK(fourier_dedekind(1, one, 2) == R(-1, 4));
    CHECK(fourier_dedekind(-4, one, 2) == R(1, 4));
    const std::vector<std::int64_t> some{3, 5};
    CHECK(fourier_dedekind(2, some, 1) == R(0));
    CHECK(fourier_dedekind(0, {}, 1) == R(0));
}

TEST_CASE("fourier_dedekind validation") {
    const std::vector<std::int64_t> bad{2};
    CHECK_THROWS_AS(fourier_dedekind(0, bad, 4), ValidationError);
    CHECK_THROWS_AS(fourier_dedekind(0, bad, 0), ValidationError);
    CHECK_THROWS_AS(fourier_dedekind(0, bad, -2), ValidationError);
}

TEST_CASE("empty parts list closed form") {
    for (long a0 = 1; a0 <= 20; ++a0)
        for (long n = -2 * a0; n <= 2 * a0; ++n) {
            Rational want = n % a0 == 0 ? Rational(a0 - 1, a0) : Rational(-1, a0);
            CHECK(fourier_dedekind(n, {}, a0) == want);
        }
}

TEST_CASE("periodicity in n is exact") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        long a0 = verify::uniform_range(rng, 1, 30);
        std::vector<std::int64_t> parts;
        for (int i = 0, d = static_cast<int>(verify::uniform_range(rng, 0, 3)); i < d; ++i) {
            std::int64_t p = verify::uniform_range(rng, 1, 40);
            if (std::gcd<std::int64_t>(p, a0) == 1) parts.push_back(p);
        }
        long n = verify::uniform_range(rng, -100, 100);
        CHECK(fourier_dedekind(n, parts, a0) == fourier_dedekind(n + a0, parts, a0));
    }
}

TEST_CASE("fourier_dedekind_period matches pointwise evaluation") {
    const std::vector<std::int64_t> parts{3, 1};
    for (long a0 : {1L, 2L, 5L, 8L}) {
        if (a0 % 3 == 0) continue;
        auto period = fourier_dedekind_period(parts, a0);
        REQUIRE(period.size() == static_cast<std::size_t>(a0));
        for (long r = 0; r < a0; ++r)
            CHECK(period[static_cast<std::size_t>(r)] == fourier_dedekind(r, parts, a0));
    }
}

TEST_CASE("agreement with floating-point summation over roots") {
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 150) {
        long a0 = verify::uniform_range(rng, 1, 40);
        int d = static_cast<int>(verify::uniform_range(rng, 0, 3));
        std::vector<std::int64_t> parts;
        bool ok = true;
        for (int i = 0; i < d; ++i) {
            std::int64_t p = verify::uniform_range(rng, 1, 30);
            if (std::gcd<std::int64_t>(p, a0) != 1) { ok = false; break; }
            parts.push_back(p);
        }
        if (!ok) continue;
        long n = verify::uniform_range(rng, -50, 50);
        ++done;
        double exact = fourier_dedekind(n, parts, a0).to_double();
        CHECK(std::abs(exact - fourier_float(n, parts, a0)) < 1e-8);
    }
}

TEST_CASE("partition-identity oracle: sum of sigma_{-n} is p(n) - q(n)") {
    std::mt19937_64 rng(33);
    auto tuples = verify::sample_coprime_tuples(rng, 20, 4, 40);
    for (const auto& t : tuples) {
        PartsTuple parts(t);
        for (long n : {0L, 1L, 7L, 23L}) {
            Rational sigma_total;
            for (std::size_t j = 0; j < parts.size(); ++j)
                sigma_total += fourier_dedekind(-n, parts.without(j), parts[j]);
            CHECK(sigma_total ==
                  Rational(partition_count(parts, n)) - q_value(parts, n));
        }
    }
}

TEST_CASE("zagier_sum spot values") {
    const std::vector<std::int64_t> ones{1, 1};
    CHECK(zagier_sum(3, ones) == R(-2, 9));
    CHECK(zagier_sum(5, ones) == R(-4, 5));
    CHECK(zagier_sum(5, ones) == R(-4) * dedekind_naive(1, 5));
    CHECK_THROWS_AS(zagier_sum(4, {2}), ValidationError);
}

TEST_CASE("zagier_sum vanishes for odd d, exhaustively in the residues") {
    for (long a0 = 1; a0 <= 30; ++a0)
        for (std::int64_t a = 1; a <= a0; ++a) {
            if (std::gcd<std::int64_t>(a, a0) != 1) continue;
            CHECK(zagier_sum(a0, {a}) == R(0));
        }
    for (long a0 = 1; a0 <= 15; ++a0)
        for (std::int64_t a = 1; a <= a0; ++a)
            for (std::int64_t b = 1; b <= a0; ++b)
                for (std::int64_t c = 1; c <= a0; ++c) {
                    if (std::gcd<std::int64_t>(a, a0) != 1 ||
                        std::gcd<std::int64_t>(b, a0) != 1 ||
                        std::gcd<std::int64_t>(c, a0) != 1)
                        continue;
                    CHECK(zagier_sum(a0, {a, b, c}) == R(0));
                }
    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; ++i) {
        long a0 = verify::uniform_range(rng, 16, 30);
        std::vector<std::int64_t> parts;
        for (int j = 0; j < 3; ++j) parts.push_back(verify::uniform_range(rng, 1, a0));
        bool ok = true;
        for (std::int64_t p : parts)
            if (std::gcd<std::int64_t>(p, a0) != 1) ok = false;
        if (ok) CHECK(zagier_sum(a0, parts) == R(0));
    }
}

TEST_CASE("zagier_sum agrees with the cotangent product in floating point") {
    std::mt19937_64 rng(35);
    int done = 0;
    while (done < 100) {
        long a0 = verify::uniform_range(rng, 1, 25);
        std::vector<std::int64_t> parts;
        bool ok = true;
        for (int j = 0; j < 2; ++j) {
            std::int64_t p = verify::uniform_range(rng, 1, 20);
            if (std::gcd<std::int64_t>(p, a0) != 1) { ok = false; break; }
            parts.push_back(p);
        }
        if (!ok) continue;
        ++done;
        CHECK(std::abs(zagier_sum(a0, parts).to_double() - zagier_float(a0, parts)) <
              1e-8);
    }
}

TEST_CASE("dedekind_via_zagier equals dedekind_naive") {
    CHECK(dedekind_via_zagier(1, 3) == R(1, 18));
    CHECK(dedekind_via_zagier(2, 3) == R(-1, 18));
    CHECK(dedekind_via_zagier(1, 2) == R(0));
    for (long b = 1; b <= 60; ++b)
        for (long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(dedekind_via_zagier(a, b) == dedekind_naive(a, b));
        }
    CHECK_THROWS_AS(dedekind_via_zagier(2, 4), ValidationError);
}

TEST_CASE("convolution association order does not matter") {
    // The d-factor convolution must be independent of grouping; check by
    // permuting the parts.
    const std::vector<std::int64_t> parts{3, 7, 9};
    const std::vector<std::int64_t> swapped{9, 3, 7};
    for (long n = -5; n <= 5; ++n)
        CHECK(fourier_dedekind(n, parts, 11) == fourier_dedekind(n, swapped, 11));
}
