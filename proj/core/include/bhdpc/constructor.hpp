#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhdpc/instance.hpp"
#include "bhdpc/paths.hpp"
#include "bhdpc/structures.hpp"
#include "bhdpc/topology.hpp"

namespace bhdpc {

// An edge selected during construction, tagged by the role it plays in the
// splice. Roles name the side-0 and side-1 endpoints by their relative block,
// counted from the block holding s1: "u3a0" leaves block 3 and enters block
// 0. Edges discovered while opening an exit out of a block are tagged by the
// vertex they introduce, and "cut" marks the path edge removed to thread one
// cover path through the other blocks.
struct CrossPick {
    std::string role;
    Edge edge;
};

// How solve() handled the top level of one instance: the split dimension,
// the renaming into the solver's frame, the terminal-layout tag that drove
// the dispatch, every selected edge, and any routing structure found.
// explain() returns it; InternalError messages embed it.
struct CasePlan {
    int n = 0;
    int k = -1;                        // split dimension, -1 at order 2
    int base_part = 0;                 // part relabeled as block 0
    std::vector<std::string> renames;  // "pairs", "roles"; applied in order
    std::string tag;                   // terminal layout, "base" at order 2
    std::vector<CrossPick> picks;
    std::optional<CycleAnchor> anchor;
    std::optional<BridgedPartCover> cover;

    std::string str() const;
};

// Build a fault-avoiding cover of the instance by two disjoint paths,
// s1 -> t1 and s2 -> t2, together visiting every vertex exactly once.
// Requires |faults| <= 2n-3, else FaultBudgetExceeded; malformed instances
// throw InputError. Every result is audited before it is returned;
// InternalError means a step found no usable candidate or the audit failed,
// and its message carries the plan so far.
Dpc2 solve(const Instance& inst);

// Run the same construction and report how it was handled instead of the
// cover itself. Deterministic: matches what solve() does.
CasePlan explain(const Instance& inst);

// The dimension whose edge class absorbs the most faults, ties to the
// smallest index. At order 3 a tie at one fault per dimension is broken
// away from any split that would strand all four terminals in one part
// with two inherited faults pinning the 16-vertex solver's one unsolvable
// pattern.
int choose_split_dimension(int n, const FaultSet& faults, const Terminals& terminals);

// Lexicographically first fault-free edge between parts i and i+1 of the
// split whose endpoints avoid forbid_endpoints and which is not listed in
// forbid_edges. Throws InternalError when no edge qualifies.
Edge pick_cross_edge(const SubcubeSplit& sp, int i, const FaultSet& faults,
                     const std::vector<Vertex>& forbid_endpoints = {},
                     const std::vector<Edge>& forbid_edges = {});

}  // namespace bhdpc
