// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dedesum/cone2d.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/verify.hpp"

using namespace dedesum;
using cone2d::Cone2;
using cone2d::SignedConeTerm;
using cone2d::Vec2;

TEST_CASE("cone validation and index") {
    CHECK(cone2d::cone_index(Cone2(Vec2(1, 0), Vec2(0, 1))) == 1);
    CHECK(cone2d::cone_index(Cone2(Vec2(1, 0), Vec2(1, 2))) == 2);
    CHECK(cone2d::cone_index(Cone2(Vec2(2, 1), Vec2(1, 3))) == 5);
    CHECK_THROWS_AS(Cone2(Vec2(2, 4), Vec2(0, 1)), ValidationError);   // not primitive
    CHECK_THROWS_AS(Cone2(Vec2(1, 2), Vec2(-1, -2)), ValidationError);  // dependent
    CHECK_THROWS_AS(Cone2(Vec2(0, 0), Vec2(0, 1)), ValidationError);
}

TEST_CASE("unimodular cone decomposes to itself") {
    Cone2 c(Vec2(1, 0), Vec2(0, 1));
    auto terms = cone2d::decompose(c);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].sign == 1);
    CHECK(terms[0].apex == Vec2(0, 0));
    CHECK(((terms[0].b1 == Vec2(1, 0) && terms[0].b2 == Vec2(0, 1)) ||
           (terms[0].b1 == Vec2(0, 1) && terms[0].b2 == Vec2(1, 0))));
    CHECK(cone2d::series_verify(terms, c, 5));
}

TEST_CASE("index-2 cone needs at most two terms") {
    Cone2 c(Vec2(1, 0), Vec2(1, 2));
    auto terms = cone2d::decompose(c);
    CHECK(terms.size() <= 2);
    CHECK(cone2d::series_verify(terms, c, 8));
}

TEST_CASE("named example cones verify") {
    for (auto [u, w] : {std::pair<Vec2, Vec2>{{3, 1}, {1, 4}},
                        {{1, 0}, {3, 7}},
                        {{0, -1}, {-1, 3}},
                        {{-2, 1}, {3, -1}},
                        {{1, 1}, {-1, 1}}}) {
        Cone2 c(u, w);
        auto terms = cone2d::decompose(c);
        for (const auto& t : terms) CHECK(abs(cone2d::det(t.b1, t.b2)) == 1);
        CHECK(cone2d::series_verify(terms, c, 8));
    }
}

TEST_CASE("enumerate_bruteforce") {
    Cone2 quadrant(Vec2(1, 0), Vec2(0, 1));
    auto pts = cone2d::enumerate_bruteforce(quadrant, 2);
    CHECK(pts.size() == 9);  // the grid square [0,2]^2

    auto origin_only = cone2d::enumerate_bruteforce(quadrant, 0);
    REQUIRE(origin_only.size() == 1);
    CHECK(origin_only[0] == Vec2(0, 0));

    // Membership arithmetic: p in cone((1,0),(1,2)) iff p = s(1,0) + t(1,2)
    // with s,t >= 0, i.e. 0 <= p.y <= 2 p.x.
    Cone2 c(Vec2(1, 0), Vec2(1, 2));
    auto got = cone2d::enumerate_bruteforce(c, 2);
    std::vector<Vec2> want;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            if (x >= 0 && y >= 0 && y <= 2 * x) want.emplace_back(x, y);
    CHECK(got == want);
    CHECK_THROWS_AS(cone2d::enumerate_bruteforce(c, -1), ValidationError);
}

TEST_CASE("series_verify rejects a wrong decomposition") {
    Cone2 c(Vec2(1, 0), Vec2(1, 2));
    // The whole first quadrant is not this cone.
    std::vector<SignedConeTerm> wrong{{1, Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}};
    CHECK_FALSE(cone2d::series_verify(wrong, c, 4));
}

TEST_CASE("Fibonacci cones: term count stays logarithmic in the index") {
    long f1 = 1, f2 = 1;
    for (int k = 2; k <= 15; ++k) {
        long next = f1 + f2;
        f1 = f2;
        f2 = next;
        Cone2 c(Vec2(1, 0), Vec2(f1, f2));
        auto terms = cone2d::decompose(c);
        double index = cone2d::cone_index(c).get_d();
        CHECK(static_cast<double>(terms.size()) <= 4.0 * (1.0 + std::log2(index)));
        CHECK(cone2d::series_verify(terms, c, 6));
    }
}

TEST_CASE("random cones: unimodular terms, log-bounded count, exact series") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 60) {
        Vec2 u(static_cast<long>(verify::uniform_range(rng, -60, 60)),
               static_cast<long>(verify::uniform_range(rng, -60, 60)));
        Vec2 w(static_cast<long>(verify::uniform_range(rng, -60, 60)),
               static_cast<long>(verify::uniform_range(rng, -60, 60)));
        if (u.is_zero() || w.is_zero()) continue;
        Integer gu = gcd(u.x, u.y);
        u.x /= gu; u.y /= gu;
        Integer gw = gcd(w.x, w.y);
        w.x /= gw; w.y /= gw;
        if (cone2d::det(u, w) == 0) continue;
        ++done;
        Cone2 c(u, w);
        auto terms = cone2d::decompose(c);
        for (const auto& t : terms) CHECK(abs(cone2d::det(t.b1, t.b2)) == 1);
        double index = cone2d::cone_index(c).get_d();
        CHECK(static_cast<double>(terms.size()) <= 4.0 * (1.0 + std::log2(index)));
        CHECK(cone2d::series_verify(terms, c, 8));
    }
}
