#pragma once

#include <stdexcept>
#include <string>

namespace ghyp {

// Invalid graphs, polynomials, points, or command arguments.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Rotation systems that are malformed or fail the sphere (Euler) check.
struct embedding_error : std::runtime_error {
    explicit embedding_error(const std::string& what) : std::runtime_error(what) {}
};

// Work guards: inputs whose exact computation would not finish at desk scale.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic would leave the fixed-width range; results are never wrapped.
struct arithmetic_overflow : std::runtime_error {
    explicit arithmetic_overflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghyp
