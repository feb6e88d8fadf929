#pragma once

#include <stdexcept>
#include <string>

namespace hit {

// Malformed or inconsistent user input (bad cycle string, product-one
// violation, schema error).  Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A brute-force operation needed more elements than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.  Maps to CLI exit code 2.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hit
