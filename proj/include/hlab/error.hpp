#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or parameter outside the admissible range.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// File or text input that could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Mesh with an edge not shared by exactly two triangles.
struct NonManifoldError : Error {
    explicit NonManifoldError(const std::string& msg) : Error(msg) {}
};

/// Mesh whose triangle windings disagree across an edge.
struct OrientationError : Error {
    explicit OrientationError(const std::string& msg) : Error(msg) {}
};

/// Mesh containing a zero-area or duplicate-vertex triangle.
struct DegenerateTriangleError : Error {
    explicit DegenerateTriangleError(const std::string& msg) : Error(msg) {}
};

/// An iterative routine hit its budget before reaching the requested
/// tolerance. Carries the best value obtained so far.
struct ConvergenceError : Error {
    double partial_value;
    double error_estimate;
    ConvergenceError(const std::string& msg, double partial, double err)
        : Error(msg), partial_value(partial), error_estimate(err) {}
};

} // namespace hlab
