// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dedesum/rational.hpp"

namespace dedesum {

/// Fractional part {x} = x - floor(x), in [0, 1).
Rational frac(const Rational& x);

/// Sawtooth ((x)): {x} - 1/2 for non-integer x, 0 for integer x.
/// Odd and 1-periodic.
Rational sawtooth(const Rational& x);

/// Periodized second Bernoulli polynomial B2(x) = {x}^2 - {x} + 1/6.
Rational bernoulli2(const Rational& x);

}  // namespace dedesum
