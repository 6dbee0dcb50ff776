#pragma once

#include <stdexcept>
#include <string>

namespace ventropy {

/// Bad argument or malformed input (CLI exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured budget (grid points, scan steps, ...) was exceeded (CLI exit code 3).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Monte-Carlo estimate could not reach the requested precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ventropy
