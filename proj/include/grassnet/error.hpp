#pragma once

#include <stdexcept>
#include <string>

namespace grassnet {

// Error taxonomy used across the library. Everything derives from the
// standard exception types so callers can catch coarsely or precisely.

struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

/// Thrown when elimination meets a vanishing pivot; the message names it.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParityError : std::invalid_argument {
    explicit ParityError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Combinatorial brute-force guard exceeded (minor enumeration caps).
struct SizeGuardError : std::invalid_argument {
    explicit SizeGuardError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A subspace-invariance precondition failed (operator does not preserve it).
struct InvarianceError : std::runtime_error {
    explicit InvarianceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A coordinate expression in a chosen basis has no exact solution.
struct BasisError : std::runtime_error {
    explicit BasisError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegeneratePointError : std::runtime_error {
    explicit DegeneratePointError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace grassnet
