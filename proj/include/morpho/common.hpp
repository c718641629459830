#pragma once

#include <stdexcept>
#include <string>

namespace morpho {

// Thrown when tensor shapes or matrix dimensions do not line up.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on invalid argument values (negative thresholds, bad configs, ...).
struct ValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed or truncated files, bad magic, checksum mismatch.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on API misuse (non-scalar backward root, unknown scope names, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace morpho
