// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dedesum/rational.hpp"

namespace dedesum {
namespace cone2d {

struct Vec2 {
    Integer x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Integer xx, Integer yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec2(long xx, long yy) : x(xx), y(yy) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator<(const Vec2& o) const {  // lexicographic
        return x != o.x ? x < o.x : y < o.y;
    }
    bool is_zero() const { return x == 0 && y == 0; }
};

Integer det(const Vec2& a, const Vec2& b);
Integer dot(const Vec2& a, const Vec2& b);

/// Closed 2D simplicial cone: the nonnegative real span of two primitive,
/// linearly independent integer generators.
class Cone2 {
public:
    Cone2(Vec2 u, Vec2 w);

    const Vec2& u() const { return u_; }
    const Vec2& w() const { return w_; }

    bool contains(const Vec2& point) const;

private:
    Vec2 u_, w_;
};

/// |det(u, w)|: the index of the generator lattice, 1 iff unimodular.
Integer cone_index(const Cone2& c);

/// One summand of a signed unimodular decomposition of the cone's lattice
/// generating function: sign * x^apex / ((1 - x^b1)(1 - x^b2)) with (b1, b2)
/// a lattice basis.
struct SignedConeTerm {
    int sign = 1;  // +1 or -1
    Vec2 apex;
    Vec2 b1, b2;
};

/// Signed unimodular decomposition of f(K, x) = sum_{m in K cap Z^2} x^m,
/// O(log index) terms. The cone is polarized, split recursively along a
/// Lagrange-Gauss-shortest lattice vector (so child indices drop to about
/// sqrt(index)), and each unimodular piece is polarized back; lower-
/// dimensional discrepancies die under polarization, so the signed sum of
/// terms equals f(K, x) exactly as rational functions.
std::vector<SignedConeTerm> decompose(const Cone2& c);

/// All lattice points of the closed cone with sup-norm at most N, found by
/// the direct membership test. Sorted lexicographically. Independent oracle
/// for series_verify.
std::vector<Vec2> enumerate_bruteforce(const Cone2& c, std::int64_t N);

/// Expands each term as a formal Laurent series in the direction of a fixed
/// generic dual vector of c (denominators are flipped to point that way,
/// which is what makes the signed identity literally summable), truncates to
/// the box ||m||_inf <= N and compares the 0/1 coefficients against
/// enumerate_bruteforce.
bool series_verify(std::span<const SignedConeTerm> terms, const Cone2& c,
                   std::int64_t N);

}  // namespace cone2d
}  // namespace dedesum
