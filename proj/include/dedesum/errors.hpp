// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace dedesum {

/// An argument violates a documented precondition (non-coprime inputs,
/// nonpositive modulus, malformed text, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inversion of something that has no inverse (zero rational, series with
/// vanishing constant term).
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A mathematical guarantee failed to hold at runtime. Never valid output;
/// always a bug in this library.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dedesum
