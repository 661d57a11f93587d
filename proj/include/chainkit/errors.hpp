#pragma once

#include <stdexcept>
#include <string>

namespace chainkit {

struct InvalidParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Stretch factor is undefined when the chain endpoints coincide.
struct ZeroBaselineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chainkit
