#pragma once

#include <stdexcept>

namespace sl4 {

/// A weight that must land on an integer lattice does not.
struct NonIntegralError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A coordinate that must be nonnegative is negative.
struct NegativeInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace sl4
