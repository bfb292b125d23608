#pragma once

#include <stdexcept>
#include <string>

namespace cgr {

// Bad arguments from callers (unknown vertex, out-of-range n, ...).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& m) : std::invalid_argument(m) {}
};

// Retry caps, recursion budgets, impossible internal states.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& m) : std::runtime_error(m) {}
};

// A mathematical invariant that must hold for every valid input failed.
// Signals a pipeline bug, never bad data.
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& m) : std::runtime_error(m) {}
};

// Malformed files, unreadable paths.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace cgr
