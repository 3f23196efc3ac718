#pragma once

#include <stdexcept>

namespace qdt {

/// Raised when an argument violates a documented precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qdt
