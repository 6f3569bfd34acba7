#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bjq {

// Malformed expression text; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Invalid arguments or configuration (bad grid, τ outside [0,1], ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands built on different grids.
class GridMismatchError : public ValidationError {
public:
    GridMismatchError() : ValidationError("grid mismatch between operands") {}
};

// A numerical precondition failed (near-orthogonal states, off-grid point, non-finite samples).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bjq
