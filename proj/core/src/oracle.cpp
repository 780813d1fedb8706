#include "bhdpc/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "bhdpc/hampath.hpp"
#include "cover_impl.hpp"

namespace bhdpc {

namespace {

using detail::CoverSearch;

template <int W>
OracleResult run_oracle(const Instance& inst, long long budget, const BhGraph& g) {
    CoverSearch<W> cs(g);
    cs.build(inst.faults);
    cs.budget = budget;

    OracleResult res;
    bool found = cs.solve(vertex_id(inst.terminals.s1), vertex_id(inst.terminals.s2),
                          vertex_id(inst.terminals.t1), vertex_id(inst.terminals.t2));
    res.expansions = cs.used();
    if (found) {
        res.status = OracleStatus::Exists;
        for (int id : cs.p1) res.dpc.p1.vertices.push_back(g.vertex(id));
        for (int id : cs.inner.seq) res.dpc.p2.vertices.push_back(g.vertex(id));
    } else {
        res.status = cs.exceeded ? OracleStatus::Timeout : OracleStatus::NotExists;
    }
    return res;
}

}  // namespace

OracleResult brute_force_dpc(const Instance& inst, long long budget) {
    inst.check();
    if (budget < 0) budget = default_search_budget();
    const BhGraph& g = BhGraph::get(inst.n);
    if (g.nv() <= 64) return run_oracle<1>(inst, budget, g);
    return run_oracle<4>(inst, budget, g);
}

std::string Certificate::describe() const {
    if (kind == Kind::ExhaustedSearch) return "exhausted search space without finding a cover";
    std::string s = "vertex " + witness.str() + " keeps " +
                    std::to_string(free_edges.size()) + " fault-free edge(s), all into the " +
                    (into_sources ? "source" : "sink") + " pair";
    return s;
}

std::optional<Certificate> infeasibility_certificate(const Instance& inst) {
    inst.check();
    const Terminals& t = inst.terminals;
    const BhGraph& g = BhGraph::get(inst.n);
    for (VertexId id = 0; id < g.nv(); id++) {
        Vertex w = g.vertex(id);
        if (t.is_terminal(w)) continue;
        std::vector<Edge> free;
        bool overflow = false;
        for (VertexId nb : g.adj(id)) {
            Edge e(w, g.vertex(nb));
            if (inst.faults.contains(e)) continue;
            free.push_back(e);
            if (free.size() > 2) {
                overflow = true;
                break;
            }
        }
        if (overflow) continue;
        auto leads_into = [&](const Vertex& a, const Vertex& b) {
            for (const Edge& e : free) {
                const Vertex& o = e.other(w);
                if (o != a && o != b) return false;
            }
            return true;
        };
        Certificate c;
        c.kind = Certificate::Kind::BlockedVertex;
        c.witness = w;
        c.free_edges = free;
        if (leads_into(t.s1, t.s2)) {
            c.into_sources = true;
            return c;
        }
        if (leads_into(t.t1, t.t2)) {
            c.into_sources = false;
            return c;
        }
    }
    return std::nullopt;
}

Instance counterexample_instance(int n, const Vertex& s1, const Vertex& w, const Vertex& t1,
                                 const Vertex& t2) {
    check_vertex(s1, n);
    check_vertex(w, n);
    if (!adjacent(s1, w))
        throw InputError("blocking vertex " + w.str() + " is not a neighbor of " + s1.str());
    Instance inst;
    inst.n = n;
    inst.terminals = {s1, twin(s1), t1, t2};
    inst.terminals.check(n);
    for (const Vertex& nb : neighbors(w, n)) {
        if (nb == s1 || nb == inst.terminals.s2) continue;
        inst.faults.insert(Edge(w, nb));
    }
    return inst;
}

namespace {

// One u,v-path of exact length l, pruned by distance-to-target and parity.
bool path_of_length(const BhGraph& g, const std::vector<std::vector<int>>& dist, VertexId u,
                    VertexId v, int l) {
    std::vector<char> visited(g.nv(), 0);
    std::function<bool(VertexId, int)> dfs = [&](VertexId head, int len) {
        if (len == l) return head == v;
        if (head == v) return false;
        int rest = l - len;
        if (dist[head][v] > rest || ((rest - dist[head][v]) & 1)) return false;
        for (VertexId x : g.adj(head)) {
            if (visited[x]) continue;
            visited[x] = 1;
            if (dfs(x, len + 1)) return true;
            visited[x] = 0;
        }
        return false;
    };
    visited[u] = 1;
    return dfs(u, 0);
}

}  // namespace

ProbeReport property_probes(int n) {
    ProbeReport report;
    const BhGraph& g = BhGraph::get(n);

    if (n == 2) {
        std::vector<std::vector<int>> dist(g.nv(), std::vector<int>(g.nv(), 0));
        for (VertexId u = 0; u < g.nv(); u++)
            for (VertexId v = 0; v < g.nv(); v++)
                dist[u][v] = distance(g.vertex(u), g.vertex(v), n);
        for (VertexId u = 0; u < g.nv(); u++)
            for (VertexId v = u + 1; v < g.nv(); v++) {
                report.pairs_checked++;
                for (int l = dist[u][v]; l <= g.nv() - 1; l += 2)
                    if (!path_of_length(g, dist, u, v, l))
                        report.failures.push_back("no path of length " + std::to_string(l) +
                                                  " between " + g.vertex(u).str() + " and " +
                                                  g.vertex(v).str());
            }
    }

    if (n == 2 || n == 3) {
        SubcubeSplit s = split(n, n - 1);
        std::vector<int> part(g.nv());
        for (VertexId id = 0; id < g.nv(); id++) part[id] = s.part_of(g.vertex(id));

        // 8-cycle through a fixed first edge with exactly one edge inside
        // each subcube; the other four cycle edges cross between subcubes.
        auto ring_cycle = [&](VertexId u, VertexId v) {
            std::array<int, 4> cnt{};
            std::vector<char> visited(g.nv(), 0);
            std::function<bool(VertexId, int)> dfs = [&](VertexId head, int depth) {
                if (depth == 8) {
                    if (!g.adjacent(head, u)) return false;
                    if (part[head] != part[u]) return cnt == std::array<int, 4>{1, 1, 1, 1};
                    cnt[part[head]]++;
                    bool ok = cnt == std::array<int, 4>{1, 1, 1, 1};
                    cnt[part[head]]--;
                    return ok;
                }
                for (VertexId x : g.adj(head)) {
                    if (visited[x]) continue;
                    bool intra = part[x] == part[head];
                    if (intra && cnt[part[x]] == 1) continue;
                    if (intra) cnt[part[x]]++;
                    visited[x] = 1;
                    if (dfs(x, depth + 1)) return true;
                    visited[x] = 0;
                    if (intra) cnt[part[x]]--;
                }
                return false;
            };
            visited[u] = 1;
            visited[v] = 1;
            if (part[u] == part[v]) cnt[part[u]] = 1;
            return dfs(v, 2);
        };

        for (VertexId u = 0; u < g.nv(); u++)
            for (VertexId v : g.adj(u)) {
                if (v < u) continue;
                report.edges_checked++;
                if (!ring_cycle(u, v))
                    report.failures.push_back("no one-edge-per-subcube 8-cycle through " +
                                              Edge(g.vertex(u), g.vertex(v)).str());
            }
    }
    return report;
}

}  // namespace bhdpc
