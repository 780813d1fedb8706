#pragma once

#include <stdexcept>
#include <string>

namespace bhdpc {

// Bad arguments from the caller: malformed coordinates, invalid terminals,
// out-of-range dimensions, and the like.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// edge_dimension() on a non-adjacent pair.
struct NotAdjacent : InputError {
    explicit NotAdjacent(const std::string& what) : InputError(what) {}
};

// solve() refused the instance because |F| exceeds the tolerated budget 2n-3.
struct FaultBudgetExceeded : std::runtime_error {
    explicit FaultBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A construction that is guaranteed to succeed hit a dead end. Always a
// defect signal, never expected behavior.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bhdpc
