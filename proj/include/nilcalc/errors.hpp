#pragma once

#include <stdexcept>

namespace nilcalc {

/// Raised when derived tables contradict each other (singular duality system,
/// nonzero projection residual, ...).  Signals corrupted group-law data, not
/// user error; the CLI maps it to exit code 3.
struct InternalConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nilcalc
