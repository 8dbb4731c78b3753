#pragma once

#include <stdexcept>
#include <string>

namespace proglab {

// Bad arguments or malformed input data. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem trouble. CLI maps this to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A codeword stream that violates its own invariants.
struct CorruptStreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace proglab
