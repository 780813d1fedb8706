#pragma once

#include <cstdint>
#include <vector>

#include "bhdpc/paths.hpp"
#include "bhdpc/topology.hpp"

// Fault-tolerant Hamiltonian path search by complete backtracking with
// degree forcing, partite-balance, and connectivity pruning. Lexicographic
// branch order makes results deterministic. The search never misses an
// existing path; BudgetExceeded is reported separately from NotFound so a
// genuine non-existence is never masked by an aborted search.

namespace bhdpc {

// Node-expansion limit; 50 million unless the BHDPC_BUDGET environment
// variable overrides it.
long long default_search_budget();

struct HamQuery {
    int n = 0;
    FaultSet faults;
    Vertex x, y;
    std::vector<Vertex> excluded;  // vertices the path must not touch
    std::vector<Vertex> allowed;   // restrict to this set (empty = all vertices)
    long long budget = -1;         // -1 = default_search_budget()
};

enum class HamStatus { Found, NotFound, BudgetExceeded };

struct HamResult {
    HamStatus status = HamStatus::NotFound;
    Path path;  // populated when status == Found

    bool found() const { return status == HamStatus::Found; }
};

// Path x -> y through every vertex of BH_n (minus excluded/outside-allowed),
// avoiding faults. excluded must not contain x or y.
HamResult ham_path(const HamQuery& q);

// Same engine, named for its use with a non-empty excluded set.
HamResult longest_path_excluding(const HamQuery& q);

}  // namespace bhdpc
