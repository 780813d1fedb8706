#pragma once

#include "bhdpc/paths.hpp"
#include "bhdpc/topology.hpp"

namespace bhdpc {

struct Instance {
    int n = 0;
    FaultSet faults;
    Terminals terminals;

    // Structural validity: coordinate ranges, edge orders, terminal shape.
    // Deliberately does not enforce the 2n-3 budget; the oracle works on
    // instances beyond it.
    void check() const;

    // The tolerated fault budget of the constructive solver.
    int fault_budget() const { return 2 * n - 3; }
};

}  // namespace bhdpc
