#pragma once

#include <stdexcept>

namespace dicolor {

// An argument violates a documented precondition.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was applied in a state it does not support.
struct usage_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Input is well-formed but outside the implemented bounds.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (corrupt file, bad gluing, ...).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dicolor
