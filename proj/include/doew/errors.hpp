#pragma once

#include <stdexcept>
#include <string>

namespace doew {

// Bad shapes, out-of-range indices, malformed weights.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Input is well formed but the quantity is undefined there
// (non-PSD square root, theta1 = theta2 = pi, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Closed-form coefficient table hit b_i = b_j; sign functions undefined.
class TieError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace doew
