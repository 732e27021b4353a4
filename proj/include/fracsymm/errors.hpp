#pragma once

#include <stdexcept>
#include <string>

namespace fracsymm {

// Numerical failure (quadrature non-convergence, solver breakdown,
// violated solver contract). CLI maps these to exit code 3.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested accuracy cannot be reached in the given regime
// (e.g. hypergeometric branch with ratio^2 -> 1).
struct accuracy_error : numerical_error {
    explicit accuracy_error(const std::string& msg) : numerical_error(msg) {}
};

}  // namespace fracsymm
