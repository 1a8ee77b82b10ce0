#pragma once
#include <stdexcept>
#include <string>

namespace cusp {

// Bad input: malformed text, unknown names, violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed or ingested quantity disagrees with what it must be.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured search or enumeration limit was hit before completion.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cusp
