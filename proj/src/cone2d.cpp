// SPDX-License-Identifier: Apache-2.0
#include "dedesum/cone2d.hpp"

#include <utility>

#include "dedesum/errors.hpp"

namespace dedesum {
namespace cone2d {

Integer det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Integer dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

namespace {

Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

Integer content(const Vec2& v) { return gcd(v.x, v.y); }

Vec2 primitive(Vec2 v) {
    Integer g = content(v);
    if (g > 1) {
        v.x /= g;
        v.y /= g;
    }
    return v;
}

Integer norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }

// Nearest integer to a/b for b > 0 (ties rounded up).
Integer round_div(const Integer& a, const Integer& b) {
    Integer q;
    Integer num = 2 * a + b;
    Integer den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Lagrange-Gauss reduction; on return a is a shortest nonzero vector of the
// lattice spanned by (a, b).
void gauss_reduce(Vec2& a, Vec2& b) {
    for (;;) {
        if (norm2(a) > norm2(b)) std::swap(a, b);
        Integer t = round_div(dot(a, b), norm2(a));
        if (t == 0) return;
        b = b - Vec2(t * a.x, t * a.y);
    }
}

// Generators of the polar dual {y : <y,p> >= 0, <y,q> >= 0}; primitive, and
// |det| is preserved.
std::pair<Vec2, Vec2> dual_generators(const Vec2& p, const Vec2& q) {
    int s = det(p, q) > 0 ? 1 : -1;
    Vec2 g1 = rot90(p), g2 = rot90(q);
    if (s < 0) g1 = -g1;
    if (s > 0) g2 = -g2;
    return {primitive(g1), primitive(g2)};
}

struct SignedCone {
    int sign;
    Vec2 p, q;
};

// Signed splitting of cone(p, q), valid modulo lower-dimensional cones. The
// shortest vector z of the coefficient lattice {(alpha, beta) :
// alpha p + beta q integral} has |coefficients| <= 1.08/sqrt(index), so both
// children have index about sqrt(index) and the recursion emits O(log index)
// unimodular cones.
void split(const Vec2& p, const Vec2& q, int sign, std::vector<SignedCone>& out) {
    Integer D = det(p, q);
    Integer absD = abs(D);
    if (absD == 1) {
        out.push_back({sign, p, q});
        return;
    }
    // Rows of D * M^{-1} for M = [p; q]: the coefficient lattice scaled by D.
    Vec2 A1(q.y, -p.y), A2(-q.x, p.x);
    gauss_reduce(A1, A2);
    Vec2 v = A1;

    // z = (v.x * p + v.y * q)/D is integral; its coefficients are v/D.
    Integer zx_num = v.x * p.x + v.y * q.x;
    Integer zy_num = v.x * p.y + v.y * q.y;
    if (!mpz_divisible_p(zx_num.get_mpz_t(), D.get_mpz_t()) ||
        !mpz_divisible_p(zy_num.get_mpz_t(), D.get_mpz_t()))
        throw InternalInconsistencyError("cone2d: short vector is not integral");
    Vec2 z(zx_num / D, zy_num / D);
    int salpha = mpz_sgn(v.x.get_mpz_t()) * mpz_sgn(D.get_mpz_t());
    int sbeta = mpz_sgn(v.y.get_mpz_t()) * mpz_sgn(D.get_mpz_t());
    if (z.is_zero() || salpha == 0 || sbeta == 0)
        throw InternalInconsistencyError("cone2d: short vector on a generator line");
    if (salpha < 0 && sbeta < 0) {
        z = -z;
        salpha = -salpha;
        sbeta = -sbeta;
    }
    z = primitive(z);
    if (abs(det(p, z)) >= absD || abs(det(z, q)) >= absD)
        throw InternalInconsistencyError("cone2d: index did not decrease");

    if (salpha > 0 && sbeta > 0) {
        // z inside: cone(p,q) = cone(p,z) + cone(z,q) off the shared ray.
        split(p, z, sign, out);
        split(z, q, sign, out);
    } else if (salpha > 0) {
        // z beyond the p side: cone(z,q) = cone(z,p) + cone(p,q).
        split(z, q, sign, out);
        split(z, p, -sign, out);
    } else {
        // z beyond the q side: cone(p,z) = cone(p,q) + cone(q,z).
        split(p, z, sign, out);
        split(q, z, -sign, out);
    }
}

}  // namespace

Cone2::Cone2(Vec2 u, Vec2 w) : u_(std::move(u)), w_(std::move(w)) {
    if (u_.is_zero() || w_.is_zero())
        throw ValidationError("Cone2: generators must be nonzero");
    if (content(u_) != 1 || content(w_) != 1)
        throw ValidationError("Cone2: generators must be primitive");
    if (det(u_, w_) == 0)
        throw ValidationError("Cone2: generators must be linearly independent");
}

bool Cone2::contains(const Vec2& point) const {
    int s = det(u_, w_) > 0 ? 1 : -1;
    Integer alpha = det(point, w_) * s;
    Integer beta = det(u_, point) * s;
    return alpha >= 0 && beta >= 0;
}

Integer cone_index(const Cone2& c) { return abs(det(c.u(), c.w())); }

std::vector<SignedConeTerm> decompose(const Cone2& c) {
    std::vector<SignedConeTerm> terms;
    if (cone_index(c) == 1) {
        terms.push_back({1, Vec2(), c.u(), c.w()});
        return terms;
    }
    auto [d1, d2] = dual_generators(c.u(), c.w());
    std::vector<SignedCone> dual_pieces;
    split(d1, d2, 1, dual_pieces);
    terms.reserve(dual_pieces.size());
    for (const SignedCone& piece : dual_pieces) {
        auto [b1, b2] = dual_generators(piece.p, piece.q);
        if (abs(det(b1, b2)) != 1)
            throw InternalInconsistencyError("cone2d: non-unimodular term emitted");
        terms.push_back({piece.sign, Vec2(), b1, b2});
    }
    return terms;
}

std::vector<Vec2> enumerate_bruteforce(const Cone2& c, std::int64_t N) {
    if (N < 0) throw ValidationError("enumerate_bruteforce: N must be >= 0");
    std::vector<Vec2> points;
    for (std::int64_t x = -N; x <= N; ++x)
        for (std::int64_t y = -N; y <= N; ++y) {
            Vec2 p(static_cast<long>(x), static_cast<long>(y));
            if (c.contains(p)) points.push_back(std::move(p));
        }
    return points;  // already lexicographic by construction
}

namespace {

// Expansion direction: a vector interior to the dual cone, with an
// infinitesimal lexicographic perturbation so no denominator exponent is
// ever orthogonal to it.
struct Direction {
    Vec2 ell;
    bool positive(const Vec2& b) const {
        Integer t = dot(ell, b);
        if (t != 0) return t > 0;
        if (b.x != 0) return b.x > 0;
        return b.y > 0;
    }
};

}  // namespace

bool series_verify(std::span<const SignedConeTerm> terms, const Cone2& c,
                   std::int64_t N) {
    if (N < 0) throw ValidationError("series_verify: N must be >= 0");
    auto [d1, d2] = dual_generators(c.u(), c.w());
    Direction dir{d1 + d2};

    const std::int64_t W = 2 * N + 1;
    std::vector<long> counts(static_cast<std::size_t>(W * W), 0);

    for (const SignedConeTerm& term : terms) {
        int sign = term.sign;
        Vec2 apex = term.apex;
        Vec2 b1 = term.b1, b2 = term.b2;
        Integer D = det(b1, b2);
        if (abs(D) != 1)
            throw ValidationError("series_verify: terms must be unimodular");
        // 1/(1 - x^b) = -x^{-b}/(1 - x^{-b}): flip denominators that point
        // against the expansion direction.
        for (Vec2* b : {&b1, &b2}) {
            if (!dir.positive(*b)) {
                *b = -*b;
                sign = -sign;
                apex = apex + *b;
            }
        }
        D = det(b1, b2);
        long Dl = mpz_get_si(D.get_mpz_t());
        for (std::int64_t x = -N; x <= N; ++x)
            for (std::int64_t y = -N; y <= N; ++y) {
                Vec2 r(Integer(static_cast<long>(x)) - apex.x,
                       Integer(static_cast<long>(y)) - apex.y);
                Integer m = det(r, b2) * Dl;
                Integer n = det(b1, r) * Dl;
                if (m >= 0 && n >= 0)
                    counts[static_cast<std::size_t>((x + N) * W + (y + N))] += sign;
            }
    }

    for (std::int64_t x = -N; x <= N; ++x)
        for (std::int64_t y = -N; y <= N; ++y) {
            long expected =
                c.contains(Vec2(static_cast<long>(x), static_cast<long>(y))) ? 1 : 0;
            if (counts[static_cast<std::size_t>((x + N) * W + (y + N))] != expected)
                return false;
        }
    return true;
}

}  // namespace cone2d
}  // namespace dedesum
