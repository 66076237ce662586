#pragma once

#include <stdexcept>

namespace nglab {

// Thrown when an input exceeds the size guard of an exponential-time
// operation.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nglab
