#pragma once

#include <stdexcept>
#include <string>

namespace shockscope {

// Invalid input: bad parameters, malformed files, violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to meet its own contract (no convergence,
// boundary contamination, lost positivity).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace shockscope
