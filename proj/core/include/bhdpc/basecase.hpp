#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhdpc/paths.hpp"
#include "bhdpc/topology.hpp"

// Complete machinery for the order-2 cube: the exhaustive base solver with
// its one infeasibility pattern, anchored "bridged" covers used by the
// recursive construction, and the tenon-chain gadgets on the ring layout.

namespace bhdpc {

struct Bh2Result {
    bool solved = false;
    Dpc2 dpc;                       // valid when solved
    std::optional<Vertex> witness;  // blocking vertex when the search fails

    explicit operator bool() const { return solved; }
};

// Complete search for a two-path cover of the order-2 cube under at most two
// faulty edges. Returns a verified cover whenever one exists; otherwise the
// witness names the blocked vertex if the instance matches the known
// infeasible pattern.
Bh2Result solve_bh2(const FaultSet& faults, const Terminals& terminals);

// The blocking pattern: a non-terminal vertex whose fault-free incident
// edges are exactly the two into one terminal pair. Lexicographically first
// such vertex, if any.
std::optional<Vertex> exception_witness(const FaultSet& faults, const Terminals& terminals);

// A bridged cover: two disjoint paths covering the order-2 cube where the
// covering path into end1 starts with a twin pair bridged through a common
// neighbor: q = <c, b, a, ..., end1> with a = twin(c), plus p = <u, ..., end2>.
// a, c, u sit on the side opposite the ends.
struct BridgedCover {
    Vertex a, c, b, u;
    Path p;  // u -> end2
    Path q;  // c -> end1, starting <c, b, a>
};

// Empty when the structure is valid for the given faults and ends.
std::vector<std::string> check_bridged_cover(const BridgedCover& s, const FaultSet& faults,
                                             const Vertex& end1, const Vertex& end2);

// Lexicographic scan over anchors a, bridges b, and second starts u; for
// each frame a complete cover search fills in the paths. An `accept`
// rejection moves on to the next frame. Empty result means no frame admits
// a cover.
std::optional<BridgedCover> bridged_cover_search(
    const FaultSet& faults, const Vertex& end1, const Vertex& end2,
    const std::function<bool(const BridgedCover&)>& accept = nullptr);

// Bridged cover avoiding one inner-dimension and one outer-dimension fault.
BridgedCover bridged_cover_two_faults(const Edge& e, const Edge& f, const Vertex& t1,
                                      const Vertex& t2);
// Single-fault variant; at least two anchor pairs always work, the
// lexicographically first is returned.
BridgedCover bridged_cover_single_fault(const Edge& e, const Vertex& t1, const Vertex& t2);

// All anchors a whose twin pair (a, twin(a)) admits some bridged cover.
std::vector<Vertex> bridged_cover_anchors(const FaultSet& faults, const Vertex& t1,
                                          const Vertex& t2);

// A tenon chain: an arc of the order-2 ring layout. Levels are consecutive
// twin pairs (cell diagonals); consecutive levels are completely linked (the
// 4 edges of the shared cell). The two-ended form hangs single vertices x, y
// off the first and last level; the four-ended form uses the first level
// {u, x} and last level {v, y} as its ends.
struct TenonChain {
    int m = 1;
    bool four_ended = false;
    Vertex u, x, v, y;  // two-ended chains use only x, y
    std::vector<std::array<Vertex, 2>> levels;

    std::vector<Vertex> vertices() const;
    std::vector<Edge> edges() const;
    int cell_count() const { return m + 2; }
    // chain cell index (0-based along the arc), or empty for non-chain edges
    std::optional<int> cell_of(const Edge& e) const;
    bool contains(const Edge& e) const { return cell_of(e).has_value(); }
};

// Two-ended chain with m levels strictly between x and y, clockwise from x.
TenonChain make_tenon(const Vertex& x, int m, const Vertex& y);
// Four-ended chain spanning m+3 levels clockwise from {u, twin(u)}.
TenonChain make_tenon(const Vertex& u, const Vertex& x, int m, const Vertex& v, const Vertex& y);

// Traversal of every chain vertex from x to y avoiding one optional faulty
// chain edge; m must be odd (the ends lie in different partite sets).
Path tenon_ham_path(const TenonChain& chain, const std::optional<Edge>& fault = std::nullopt);

// Disjoint u->v and x->y paths covering a four-ended chain while avoiding
// two faults in distinct cells. The paths have equal vertex counts.
std::pair<Path, Path> tenon_dpc(const TenonChain& chain, const Edge& e, const Edge& f);

}  // namespace bhdpc
