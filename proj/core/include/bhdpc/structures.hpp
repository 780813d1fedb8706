#pragma once

#include <string>
#include <vector>

#include "bhdpc/paths.hpp"
#include "bhdpc/topology.hpp"

// Routing structures found inside one part of a dimension split. They are the
// workhorses for terminal layouts where two or three of the four path ends
// crowd into the same part: each carries a near-cover of the part plus enough
// fault slack on its split-dimension edges to be spliced into the enclosing
// construction. Both finders recurse column by column down to 16-vertex
// kernels, lifting every candidate back to the original coordinates before
// testing the cross-edge conditions, and every returned structure is run
// through its checker.

namespace bhdpc {

// A 4-cycle <a, b, c, d> made of two twin pairs, with a path from u covering
// the rest of the part. The split-dimension slack: some common k-neighbor of
// {a, c} keeps both its k-edges fault-free, b keeps both of its own, d keeps
// at least one, and no dimension holds two faulty edges at u.
struct CycleAnchor {
    int k = 0;     // split dimension of the enclosing decomposition
    int part = 0;  // which part the structure lives in
    Vertex a, c;   // twin pair; with standard chirality on side 0
    Vertex b, d;   // the other twin pair, completing the 4-cycle
    Vertex u;      // a common neighbor of b and d, start of the path
    Path p;        // u -> a, covering the part except b, c and d
};

// Two disjoint paths covering the part: p runs u -> t2, q runs c -> t1 and
// enters through the bridged twin pair, <c, b, a, ...>. Slack: some common
// k-neighbor of {a, c} keeps both its k-edges fault-free, b keeps at least
// one, and no dimension holds two faulty edges at u. Terminals on side 0
// flip the chirality (u, a, c on side 1, b on side 0).
struct BridgedPartCover {
    int k = 0;
    int part = 0;
    Vertex u, a, c;
    Vertex b;  // common neighbor of a and c, off the terminals
    Path p;    // u -> t2
    Path q;    // c -> t1, starting <c, b, a>
};

// Find a cycle anchor in the given part, avoiding the faults. Intended for
// k chosen to maximize |E_k cut by faults| and |faults| <= 2n-3; smaller
// fault sets are fine. skip passes over that many admissible structures in
// the search's fixed order, for callers whose first choice dead-ends
// downstream. Throws InputError on malformed arguments and InternalError if
// the search space is exhausted.
CycleAnchor find_cycle_anchor(int n, const FaultSet& faults, int k, int part, int skip = 0);

// Find a bridged cover of the part with path ends t1, t2 (distinct vertices
// of the part on a common side). Same contract as find_cycle_anchor.
BridgedPartCover find_bridged_cover(int n, const FaultSet& faults, int k, int part,
                                    const Vertex& t1, const Vertex& t2, int skip = 0);

// Empty when the structure is valid for the given faults. Never throws.
std::vector<std::string> check_structure(const CycleAnchor& s, int n, const FaultSet& faults);
std::vector<std::string> check_structure(const BridgedPartCover& s, int n, const FaultSet& faults,
                                         const Vertex& t1, const Vertex& t2);

}  // namespace bhdpc
