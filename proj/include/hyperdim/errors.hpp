#pragma once

#include <stdexcept>
#include <string>

namespace hyperdim {

// Operands live in different ambient spaces.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed user input (documents, coefficient lists, zero forms).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (malformed partition,
// invalid partition handed to the witness builder, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A state the underlying theorems rule out. Seeing one of these means a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hyperdim
