#pragma once

#include "search_impl.hpp"

// Exhaustive two-path cover search: P1 grows from s1 by lexicographic DFS;
// whenever it reaches t1 the rest must admit a spanning s2->t2 path (checked
// by the shared engine). Pruning is restricted to necessary conditions, so a
// failed search means no cover exists over the chosen vertex set:
//  - any unfinished non-terminal vertex needs two usable edges into the
//    unfinished region (+ the current P1 end), s2/t2 need one within the
//    region, t1 one including the P1 end;
//  - a vertex pinned down to the P1 end + one other edge forces the next step;
//  - the unfinished region may split into at most two pieces: one that P1
//    consumes (ending at t1 inside it) and one for P2 holding s2 and t2.

namespace bhdpc::detail {

template <int W>
struct CoverSearch {
    const BhGraph& g;
    Searcher<W> inner;
    std::vector<FixedMask<W>> adj;
    int s1 = -1, s2 = -1, t1 = -1, t2 = -1;
    long long budget = 0, expansions = 0;
    bool exceeded = false;
    std::vector<int> p1;

    explicit CoverSearch(const BhGraph& graph) : g(graph), inner(graph) {}

    void build(const FaultSet& faults) {
        FixedMask<W> universe = FixedMask<W>::all_below(g.nv());
        inner.build(faults, universe);
        adj = inner.adj;
    }

    long long used() const { return expansions + inner.expansions; }

    // Cover all vertices outside `excluded` by an s1->t1 and an s2->t2 path.
    // On success p1 holds the first path and inner.seq the second.
    bool solve(int s1_, int s2_, int t1_, int t2_, FixedMask<W> excluded = {}) {
        s1 = s1_;
        s2 = s2_;
        t1 = t1_;
        t2 = t2_;
        exceeded = false;
        p1.clear();
        p1.push_back(s1);
        FixedMask<W> unvisited = FixedMask<W>::all_below(g.nv()) & ~excluded;
        unvisited.reset(s1);
        return dfs(s1, unvisited);
    }

    bool complement_spannable(FixedMask<W> complement) {
        inner.budget = budget - expansions;
        inner.exceeded = false;
        if (!inner.run(s2, t2, complement)) {
            if (inner.exceeded) exceeded = true;
            return false;
        }
        return true;
    }

    bool dfs(int head, FixedMask<W> unvisited) {
        if (++expansions > budget - inner.expansions) {
            exceeded = true;
            return false;
        }

        FixedMask<W> context = unvisited;
        context.set(head);
        int forced = -1, forced_count = 0;
        bool forced_close = false, dead = false;
        unvisited.for_each([&](int v) {
            bool inner_only = (v == s2 || v == t2);
            int deg = (adj[v] & (inner_only ? unvisited : context)).count();
            if (v == t1 || inner_only) {
                if (deg < 1) dead = true;
                if (v == t1 && deg == 1 && adj[v].test(head)) forced_close = true;
            } else if (deg < 2) {
                dead = true;
            } else if (deg == 2 && adj[v].test(head)) {
                if (forced_count++ == 0) forced = v;
            }
            return !dead;
        });
        if (dead || forced_count > 1 || (forced_count == 1 && forced_close)) return false;

        // Components of the unfinished region.
        {
            FixedMask<W> left = unvisited;
            int comps = 0;
            FixedMask<W> comp_s2{}, comp_t1{};
            bool split_ok = true;
            while (left.any() && split_ok) {
                int seed = left.lowest();
                FixedMask<W> comp{};
                FixedMask<W> frontier{};
                frontier.set(seed);
                while (frontier.any()) {
                    comp |= frontier;
                    FixedMask<W> next{};
                    frontier.for_each([&](int v) {
                        next |= adj[v];
                        return true;
                    });
                    frontier = next & unvisited & ~comp;
                }
                left &= ~comp;
                comps++;
                if (comps > 2) split_ok = false;
                if (comp.test(s2)) comp_s2 = comp;
                if (comp.test(t1)) comp_t1 = comp;
            }
            if (!split_ok) return false;
            if (!comp_s2.test(t2)) return false;
            if (comps == 2) {
                // P1 must finish inside the piece without s2, entered from head.
                if (comp_t1.test(s2)) return false;
                if (!(adj[head] & comp_t1).any()) return false;
            }
        }

        FixedMask<W> cands = adj[head] & unvisited;
        if (forced_count == 1) {
            FixedMask<W> only{};
            only.set(forced);
            cands &= only;
        } else if (forced_close) {
            FixedMask<W> only{};
            only.set(t1);
            cands &= only;
        }
        bool found = false;
        cands.for_each([&](int u) {
            if (u == s2 || u == t2) return true;
            if (u == t1) {
                FixedMask<W> complement = unvisited;
                complement.reset(t1);
                if (complement_spannable(complement)) {
                    p1.push_back(u);
                    found = true;
                    return false;
                }
                return !exceeded;
            }
            p1.push_back(u);
            FixedMask<W> next_unv = unvisited;
            next_unv.reset(u);
            if (dfs(u, next_unv)) {
                found = true;
                return false;
            }
            p1.pop_back();
            return !exceeded;
        });
        return found;
    }
};

}  // namespace bhdpc::detail
