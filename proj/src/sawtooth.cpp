// SPDX-License-Identifier: Apache-2.0
#include "dedesum/sawtooth.hpp"

namespace dedesum {

Rational frac(const Rational& x) { return x.frac(); }

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

Rational bernoulli2(const Rational& x) {
    Rational f = x.frac();
    return f * f - f + Rational(1, 6);
}

}  // namespace dedesum
