#pragma once

#include <stdexcept>
#include <string>

namespace qsl2 {

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Denominator vanishes at the evaluation point.
struct PoleError : ScalarError {
    using ScalarError::ScalarError;
};

// Radicand evaluates to a negative number.
struct NegativeRadicandError : ScalarError {
    using ScalarError::ScalarError;
};

// Inverse requested for a sum of distinct radicals.
struct UnsupportedInverseError : ScalarError {
    using ScalarError::ScalarError;
};

// Spin, weight or index outside the valid range.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

}  // namespace qsl2
