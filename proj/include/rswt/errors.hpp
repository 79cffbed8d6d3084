#pragma once

#include <stdexcept>
#include <string>

namespace rswt {

// Bad user input (function spec text, out-of-range arguments).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was asked to exceed a configured enumeration cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal structural invariant of the matrix construction failed.
// These indicate a bug, never bad input.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

// Two routes that must agree exactly disagreed.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A weight was not of the form 2^(n-1) or 2^(n-1) +- 2^((n+v)/2 - 1).
struct NotPlateaued : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative root refinement failed to reach the requested accuracy.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rswt
