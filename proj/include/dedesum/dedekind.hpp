// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dedesum/rational.hpp"

namespace dedesum {

/// Classical Dedekind sum s(a,b) = sum_{k mod b} ((ka/b))((k/b)) by direct
/// summation; O(b) work, no coprimality required. b >= 1.
Rational dedekind_naive(const Integer& a, const Integer& b);

/// s(a,b) for gcd(a,b) = 1 via the reciprocity recursion
///   s(a,b) = -1/4 + (a/b + 1/(ab) + b/a)/12 - s(b mod a, a),
/// with a reduced mod b first and the base cases s(0,b) = 0,
/// s(1,b) = (b-1)(b-2)/(12b), s(a,1) = 0. Euclidean descent, so the number
/// of steps is O(log min(a,b)) and 256-bit inputs are cheap.
Rational dedekind_fast(Integer a, Integer b);

/// Dedekind-Rademacher sum s(a,b;x,y) = sum_{k mod b} (((k+y)a/b + x))(((k+y)/b)).
/// x, y are arbitrary rationals; the sawtooth's periodicity makes any
/// representatives equivalent.
Rational rademacher_sum(const Integer& a, const Integer& b,
                        const Rational& x, const Rational& y);

/// The shifted sum s(a,b; n/b, 0) = sum_{k mod b} (((ka+n)/b))((k/b)).
Rational knuth_sum(const Integer& a, const Integer& b, const Integer& n);

}  // namespace dedesum
