#include "bhdpc/hampath.hpp"

#include <cstdlib>

#include "search_impl.hpp"

namespace bhdpc {

long long default_search_budget() {
    static long long cached = [] {
        if (const char* s = std::getenv("BHDPC_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(s, &end, 10);
            if (end != s && v > 0) return v;
        }
        return 50'000'000LL;
    }();
    return cached;
}

namespace {

using detail::FixedMask;
using detail::Searcher;

template <int W>
HamResult run_search(const HamQuery& q, const BhGraph& g) {
    FixedMask<W> universe;
    if (q.allowed.empty()) {
        universe = FixedMask<W>::all_below(g.nv());
    } else {
        for (const Vertex& v : q.allowed) {
            check_vertex(v, q.n);
            universe.set(vertex_id(v));
        }
    }
    for (const Vertex& v : q.excluded) {
        check_vertex(v, q.n);
        if (v == q.x || v == q.y)
            throw InputError("excluded vertex " + v.str() + " is an endpoint");
        universe.reset(vertex_id(v));
    }
    VertexId xs = vertex_id(q.x), ys = vertex_id(q.y);
    if (!universe.test(xs) || !universe.test(ys))
        throw InputError("endpoint outside the allowed vertex set");

    Searcher<W> s(g);
    s.build(q.faults, universe);
    s.budget = (q.budget < 0) ? default_search_budget() : q.budget;

    HamResult res;
    if (s.run(xs, ys, universe)) {
        res.status = HamStatus::Found;
        for (int id : s.seq) res.path.vertices.push_back(g.vertex(id));
    } else {
        res.status = s.exceeded ? HamStatus::BudgetExceeded : HamStatus::NotFound;
    }
    return res;
}

HamResult run(const HamQuery& q) {
    if (q.n < 1) throw InputError("order must be at least 1");
    check_vertex(q.x, q.n);
    check_vertex(q.y, q.n);
    if (q.x == q.y) throw InputError("path endpoints coincide");
    for (const Edge& e : q.faults.edges)
        if (e.u.order() != q.n)
            throw InputError("fault edge " + e.str() + " has wrong order");
    const BhGraph& g = BhGraph::get(q.n);
    if (g.nv() <= 64) return run_search<1>(q, g);
    return run_search<4>(q, g);
}

}  // namespace

HamResult ham_path(const HamQuery& q) { return run(q); }

HamResult longest_path_excluding(const HamQuery& q) { return run(q); }

}  // namespace bhdpc
