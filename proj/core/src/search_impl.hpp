#pragma once

#include <vector>

#include "bhdpc/topology.hpp"
#include "mask.hpp"

// Shared backtracking core for spanning-path style searches. Complete (only
// sound pruning), lexicographic branch order, explicit node-expansion budget.

namespace bhdpc::detail {

template <int W>
struct Searcher {
    const BhGraph& g;
    std::vector<FixedMask<W>> adj;  // usable neighbors per vertex
    FixedMask<W> even_mask;
    std::vector<int8_t> side;
    int target = -1;
    long long budget = 0, expansions = 0;
    bool exceeded = false;
    std::vector<int> seq;

    explicit Searcher(const BhGraph& graph) : g(graph) {}

    void build(const FaultSet& faults, const FixedMask<W>& universe) {
        int nv = g.nv();
        adj.assign(nv, {});
        side.resize(nv);
        even_mask = {};
        for (VertexId v = 0; v < nv; v++) {
            side[v] = static_cast<int8_t>(g.vertex(v).side());
            if (side[v] == 0) even_mask.set(v);
            if (!universe.test(v)) continue;
            for (VertexId u : g.adj(v))
                if (universe.test(u)) adj[v].set(u);
        }
        for (const Edge& e : faults.edges) {
            VertexId a = vertex_id(e.u), b = vertex_id(e.v);
            adj[a].reset(b);
            adj[b].reset(a);
        }
    }

    // Spanning path from head through every unvisited vertex, ending at
    // target. Call with head's bit already cleared from unvisited.
    bool dfs(int head, FixedMask<W> unvisited, int remaining) {
        if (remaining == 0) return head == target;
        if (++expansions > budget) {
            exceeded = true;
            return false;
        }

        // Partite balance: the tail alternates sides starting opposite head.
        int h = side[head];
        int req_evens = (h == 0) ? remaining / 2 : (remaining + 1) / 2;
        if ((unvisited & even_mask).count() != req_evens) return false;
        if (side[target] != (h ^ (remaining & 1))) return false;

        // Availability: every future vertex still needs enough usable edges
        // into the unfinished region. A non-target vertex pinned to exactly
        // head + one other neighbor must be taken next.
        FixedMask<W> context = unvisited;
        context.set(head);
        int forced = -1, forced_count = 0;
        bool dead = false;
        unvisited.for_each([&](int v) {
            int deg = (adj[v] & context).count();
            if (v == target) {
                if (deg < 1) dead = true;
            } else if (deg < 2) {
                dead = true;
            } else if (deg == 2 && adj[v].test(head)) {
                if (forced_count++ == 0) forced = v;
            }
            return !dead;
        });
        if (dead || forced_count > 1) return false;

        // Connectivity: the unfinished region must be reachable from head.
        FixedMask<W> reached{};
        FixedMask<W> frontier = adj[head] & unvisited;
        while (frontier.any()) {
            reached |= frontier;
            FixedMask<W> next{};
            frontier.for_each([&](int v) {
                next |= adj[v];
                return true;
            });
            frontier = next & unvisited & ~reached;
        }
        if (!(reached == unvisited)) return false;

        FixedMask<W> cands = adj[head] & unvisited;
        if (forced_count == 1) {
            FixedMask<W> only{};
            only.set(forced);
            cands &= only;
        }
        bool found = false;
        cands.for_each([&](int u) {
            if (u == target && remaining > 1) return true;
            seq.push_back(u);
            FixedMask<W> next_unv = unvisited;
            next_unv.reset(u);
            if (dfs(u, next_unv, remaining - 1)) {
                found = true;
                return false;
            }
            seq.pop_back();
            return !exceeded;
        });
        return found;
    }

    // Convenience wrapper: spanning x->y path of the vertices in cover.
    bool run(VertexId x, VertexId y, FixedMask<W> cover) {
        target = y;
        seq.clear();
        seq.push_back(x);
        cover.reset(x);
        return dfs(x, cover, cover.count());
    }
};

}  // namespace bhdpc::detail
