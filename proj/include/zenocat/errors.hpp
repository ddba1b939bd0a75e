#pragma once

#include <stdexcept>
#include <string>

namespace zenocat {

// Invalid physical input or configuration (bad spectrum argument, bad config key, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to reach its tolerance; message carries diagnostics.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A truncated basis / distribution is too small for the requested accuracy.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zenocat
