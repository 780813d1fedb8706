#include "bhdpc/basecase.hpp"

#include <algorithm>
#include <functional>

#include "bhdpc/hampath.hpp"
#include "bhdpc/oracle.hpp"
#include "bhdpc/verify.hpp"
#include "cover_impl.hpp"
#include "ring_bh2.hpp"

namespace bhdpc {

namespace {

void check_bh2_faults(const FaultSet& faults) {
    for (const Edge& e : faults.edges)
        if (e.u.order() != 2) throw InputError("fault edge " + e.str() + " is not an order-2 edge");
}

}  // namespace

Bh2Result solve_bh2(const FaultSet& faults, const Terminals& terminals) {
    if (terminals.s1.order() != 2) throw InputError("base solver handles order 2 only");
    terminals.check(2);
    check_bh2_faults(faults);
    if (faults.size() > 2) throw InputError("base solver accepts at most two faults");

    Instance inst{2, faults, terminals};
    OracleResult r = brute_force_dpc(inst);
    if (r.status == OracleStatus::Timeout) throw InternalError("base search ran out of budget");

    Bh2Result out;
    if (r.exists()) {
        out.solved = true;
        out.dpc = r.dpc;
        auto msgs = verify_dpc(inst, out.dpc);
        if (!msgs.empty()) throw InternalError("base solver cover invalid: " + msgs.front());
    } else {
        out.witness = exception_witness(faults, terminals);
    }
    return out;
}

std::optional<Vertex> exception_witness(const FaultSet& faults, const Terminals& terminals) {
    int n = terminals.s1.order();
    terminals.check(n);
    const BhGraph& g = BhGraph::get(n);
    for (VertexId id = 0; id < g.nv(); id++) {
        Vertex w = g.vertex(id);
        if (terminals.is_terminal(w)) continue;
        std::vector<Vertex> free;
        for (VertexId nb : g.adj(id))
            if (!faults.contains(w, g.vertex(nb))) free.push_back(g.vertex(nb));
        if (free.size() != 2) continue;
        auto pair_is = [&](const Vertex& p, const Vertex& q) {
            return (free[0] == p && free[1] == q) || (free[0] == q && free[1] == p);
        };
        if (pair_is(terminals.s1, terminals.s2) || pair_is(terminals.t1, terminals.t2)) return w;
    }
    return std::nullopt;
}

std::vector<std::string> check_bridged_cover(const BridgedCover& s, const FaultSet& faults,
                                             const Vertex& end1, const Vertex& end2) {
    std::vector<std::string> out;
    for (const Vertex* v : {&s.a, &s.c, &s.b, &s.u})
        if (v->order() != 2) {
            out.push_back("structure vertex " + v->str() + " is not an order-2 vertex");
            return out;
        }
    if (twin(s.a) != s.c) out.push_back("a and c are not twins");
    int anchor_side = 1 - end1.side();
    if (s.a.side() != anchor_side || s.u.side() != anchor_side)
        out.push_back("anchors are not opposite the ends");
    if (s.u == s.a || s.u == s.c) out.push_back("second start collides with the anchor pair");
    if (!adjacent(s.b, s.a) || !adjacent(s.b, s.c))
        out.push_back("bridge is not a common neighbor of the anchor pair");

    if (s.q.vertices.size() < 3 || s.q.vertices[0] != s.c || s.q.vertices[1] != s.b ||
        s.q.vertices[2] != s.a)
        out.push_back("covering path does not start <c, b, a>");
    if (s.q.empty() || s.q.back() != end1) out.push_back("covering path does not end at " + end1.str());
    if (s.p.empty() || s.p.front() != s.u || s.p.back() != end2)
        out.push_back("second path does not run u -> " + end2.str());

    for (const auto& msg : s.p.violations(2, &faults)) out.push_back("second path: " + msg);
    for (const auto& msg : s.q.violations(2, &faults)) out.push_back("covering path: " + msg);

    std::array<int, 16> seen{};
    for (const Vertex& v : s.p.vertices) seen[vertex_id(v)]++;
    for (const Vertex& v : s.q.vertices) seen[vertex_id(v)]++;
    for (int id = 0; id < 16; id++)
        if (seen[id] != 1) {
            out.push_back("paths cover " + vertex_of(id, 2).str() + " " + std::to_string(seen[id]) +
                          " times");
            break;
        }
    return out;
}

namespace {

// Shared frame enumeration for the bridged-cover searches.
struct FrameEngine {
    const BhGraph& g;
    const FaultSet& faults;
    Vertex end1, end2;
    detail::CoverSearch<1> cs;

    FrameEngine(const FaultSet& fs, const Vertex& e1, const Vertex& e2)
        : g(BhGraph::get(2)), faults(fs), end1(e1), end2(e2), cs(g) {
        check_vertex(end1, 2);
        check_vertex(end2, 2);
        if (end1 == end2 || end1.side() != end2.side())
            throw InputError("cover ends must be two distinct vertices on one partite side");
        check_bh2_faults(fs);
        cs.build(fs);
        cs.budget = default_search_budget();
    }

    std::optional<BridgedCover> try_anchor(VertexId aid,
                                           const std::function<bool(const BridgedCover&)>& accept) {
        Vertex a = g.vertex(aid);
        Vertex c = twin(a);
        for (VertexId bid : g.adj(aid)) {
            Vertex b = g.vertex(bid);
            if (b == end1 || b == end2) continue;
            if (faults.contains(c, b) || faults.contains(b, a)) continue;
            for (VertexId uid = 0; uid < g.nv(); uid++) {
                Vertex u = g.vertex(uid);
                if (u.side() != a.side() || u == a || u == c) continue;
                detail::Mask64 excluded{};
                excluded.set(vertex_id(c));
                excluded.set(bid);
                if (!cs.solve(aid, (int)uid, vertex_id(end1), vertex_id(end2), excluded)) {
                    if (cs.exceeded) throw InternalError("bridged cover search ran out of budget");
                    continue;
                }
                BridgedCover out;
                out.a = a;
                out.c = c;
                out.b = b;
                out.u = u;
                out.q.vertices = {c, b};
                for (int idv : cs.p1) out.q.vertices.push_back(g.vertex(idv));
                for (int idv : cs.inner.seq) out.p.vertices.push_back(g.vertex(idv));
                auto msgs = check_bridged_cover(out, faults, end1, end2);
                if (!msgs.empty())
                    throw InternalError("bridged cover failed validation: " + msgs.front());
                if (accept && !accept(out)) continue;
                return out;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<BridgedCover> bridged_cover_search(
    const FaultSet& faults, const Vertex& end1, const Vertex& end2,
    const std::function<bool(const BridgedCover&)>& accept) {
    FrameEngine eng(faults, end1, end2);
    int anchor_side = 1 - end1.side();
    for (VertexId aid = 0; aid < 16; aid++) {
        if (eng.g.vertex(aid).side() != anchor_side) continue;
        if (auto r = eng.try_anchor(aid, accept)) return r;
    }
    return std::nullopt;
}

BridgedCover bridged_cover_two_faults(const Edge& e, const Edge& f, const Vertex& t1,
                                      const Vertex& t2) {
    if (e == f) throw InputError("need two distinct faulty edges");
    FaultSet fs;
    fs.insert(e);
    fs.insert(f);
    auto r = bridged_cover_search(fs, t1, t2);
    if (!r) throw InternalError("no bridged cover avoids both faults for these ends");
    return *r;
}

BridgedCover bridged_cover_single_fault(const Edge& e, const Vertex& t1, const Vertex& t2) {
    FaultSet fs;
    fs.insert(e);
    auto r = bridged_cover_search(fs, t1, t2);
    if (!r) throw InternalError("no bridged cover avoids the fault for these ends");
    return *r;
}

std::vector<Vertex> bridged_cover_anchors(const FaultSet& faults, const Vertex& t1,
                                          const Vertex& t2) {
    FrameEngine eng(faults, t1, t2);
    int anchor_side = 1 - t1.side();
    std::vector<Vertex> out;
    for (VertexId aid = 0; aid < 16; aid++) {
        if (eng.g.vertex(aid).side() != anchor_side) continue;
        if (eng.try_anchor(aid, nullptr)) out.push_back(eng.g.vertex(aid));
    }
    return out;
}

std::vector<Vertex> TenonChain::vertices() const {
    std::vector<Vertex> out;
    if (!four_ended) out.push_back(x);
    for (const auto& L : levels) {
        out.push_back(L[0]);
        out.push_back(L[1]);
    }
    if (!four_ended) out.push_back(y);
    return out;
}

std::vector<Edge> TenonChain::edges() const {
    std::vector<Edge> out;
    if (!four_ended) {
        out.push_back(Edge(x, levels.front()[0]));
        out.push_back(Edge(x, levels.front()[1]));
    }
    for (size_t i = 0; i + 1 < levels.size(); i++)
        for (const Vertex& p : levels[i])
            for (const Vertex& q : levels[i + 1]) out.push_back(Edge(p, q));
    if (!four_ended) {
        out.push_back(Edge(levels.back()[0], y));
        out.push_back(Edge(levels.back()[1], y));
    }
    return out;
}

std::optional<int> TenonChain::cell_of(const Edge& e) const {
    auto in_level = [](const std::array<Vertex, 2>& L, const Vertex& v) {
        return v == L[0] || v == L[1];
    };
    if (!four_ended) {
        if ((e.u == x && in_level(levels.front(), e.v)) ||
            (e.v == x && in_level(levels.front(), e.u)))
            return 0;
        if ((e.u == y && in_level(levels.back(), e.v)) ||
            (e.v == y && in_level(levels.back(), e.u)))
            return m + 1;
    }
    for (size_t i = 0; i + 1 < levels.size(); i++) {
        if ((in_level(levels[i], e.u) && in_level(levels[i + 1], e.v)) ||
            (in_level(levels[i], e.v) && in_level(levels[i + 1], e.u)))
            return four_ended ? (int)i : (int)i + 1;
    }
    return std::nullopt;
}

TenonChain make_tenon(const Vertex& x, int m, const Vertex& y) {
    check_vertex(x, 2);
    check_vertex(y, 2);
    if (m < 1 || m > 5) throw InputError("two-ended chain length must be in 1..5");
    const auto& ring = detail::RingBh2::get();
    int jx = ring.joint_of[vertex_id(x)];
    const auto& far = ring.joints[(jx + m + 2) % 8];
    if (y != far[0] && y != far[1])
        throw InputError("far endpoint " + y.str() + " is not on the chain's far joint");
    TenonChain t;
    t.m = m;
    t.x = x;
    t.y = y;
    for (int i = 1; i <= m + 1; i++) t.levels.push_back(ring.joints[(jx + i) % 8]);
    return t;
}

TenonChain make_tenon(const Vertex& u, const Vertex& x, int m, const Vertex& v, const Vertex& y) {
    check_vertex(u, 2);
    check_vertex(v, 2);
    if (m < 0 || m > 5) throw InputError("four-ended chain length must be in 0..5");
    if (twin(u) != x) throw InputError("near ends must be a twin pair");
    const auto& ring = detail::RingBh2::get();
    int ju = ring.joint_of[vertex_id(u)];
    const auto& far = ring.joints[(ju + m + 2) % 8];
    if (v != far[0] && v != far[1])
        throw InputError("far endpoint " + v.str() + " is not on the chain's far joint");
    if (twin(v) != y) throw InputError("far ends must be a twin pair");
    TenonChain t;
    t.m = m;
    t.four_ended = true;
    t.u = u;
    t.x = x;
    t.v = v;
    t.y = y;
    for (int i = 0; i <= m + 2; i++) t.levels.push_back(ring.joints[(ju + i) % 8]);
    return t;
}

Path tenon_ham_path(const TenonChain& chain, const std::optional<Edge>& fault) {
    if (chain.four_ended) throw InputError("traversal needs a two-ended chain");
    if (chain.m % 2 == 0) throw InputError("traversal needs odd chain length");
    if (fault && !chain.contains(*fault))
        throw InputError("fault " + fault->str() + " is not a chain edge");

    auto blocked = [&](const Vertex& p, const Vertex& q) { return fault && *fault == Edge(p, q); };
    const auto& L = chain.levels;
    std::vector<Vertex> seq;
    seq.push_back(chain.x);
    // Each step weaves one pair of levels: enter level i, detour through
    // level i+1, return for the sibling, leave through the other side. Two
    // binary choices per step, tried in vertex order; a fault forces the
    // other branch.
    std::function<bool(int)> walk = [&](int i) -> bool {
        if (i > chain.m) {
            if (blocked(seq.back(), chain.y)) return false;
            seq.push_back(chain.y);
            return true;
        }
        for (int first = 0; first < 2; first++)
            for (int via = 0; via < 2; via++) {
                const Vertex& a0 = L[i][first];
                const Vertex& b0 = L[i + 1][via];
                const Vertex& a1 = L[i][1 - first];
                const Vertex& b1 = L[i + 1][1 - via];
                if (blocked(seq.back(), a0) || blocked(a0, b0) || blocked(b0, a1) ||
                    blocked(a1, b1))
                    continue;
                size_t mark = seq.size();
                seq.insert(seq.end(), {a0, b0, a1, b1});
                if (walk(i + 2)) return true;
                seq.resize(mark);
            }
        return false;
    };
    if (!walk(0)) throw InternalError("no chain traversal avoids the fault");

    Path path{seq};
    FaultSet fs;
    if (fault) fs.insert(*fault);
    auto msgs = path.violations(2, &fs);
    if (!msgs.empty() || path.vertices.size() != (size_t)(2 * chain.m + 4))
        throw InternalError("chain traversal invalid: " + (msgs.empty() ? "short" : msgs.front()));
    return path;
}

std::pair<Path, Path> tenon_dpc(const TenonChain& chain, const Edge& e, const Edge& f) {
    if (!chain.four_ended) throw InputError("disjoint cover needs a four-ended chain");
    auto ce = chain.cell_of(e), cf = chain.cell_of(f);
    if (!ce) throw InputError("fault " + e.str() + " is not a chain edge");
    if (!cf) throw InputError("fault " + f.str() + " is not a chain edge");
    if (*ce == *cf) throw InputError("faults share a twisted 4-cycle");

    const auto& L = chain.levels;
    int cells = chain.m + 2;
    int sigma_first = (chain.u == L.front()[0]) ? 0 : 1;
    int sigma_last = (chain.v == L.back()[0]) ? 0 : 1;
    // Per cell the two disjoint link edges either run straight or cross;
    // faults forbid one of the pairings, the end levels pin the parity.
    std::vector<int> sigma((size_t)cells + 1);
    sigma[0] = sigma_first;
    std::function<bool(int)> choose = [&](int i) -> bool {
        if (i == cells) return sigma[(size_t)cells] == sigma_last;
        for (int crossed = 0; crossed < 2; crossed++) {
            int s = sigma[(size_t)i], t = s ^ crossed;
            Edge e1(L[(size_t)i][(size_t)s], L[(size_t)i + 1][(size_t)t]);
            Edge e2(L[(size_t)i][(size_t)(1 - s)], L[(size_t)i + 1][(size_t)(1 - t)]);
            if (e1 == e || e1 == f || e2 == e || e2 == f) continue;
            sigma[(size_t)i + 1] = t;
            if (choose(i + 1)) return true;
        }
        return false;
    };
    if (!choose(0)) throw InternalError("no chain routing avoids both faults");

    Path first, second;
    for (int i = 0; i <= cells; i++) {
        first.vertices.push_back(L[(size_t)i][(size_t)sigma[(size_t)i]]);
        second.vertices.push_back(L[(size_t)i][(size_t)(1 - sigma[(size_t)i])]);
    }
    FaultSet fs;
    fs.insert(e);
    fs.insert(f);
    for (const Path* p : {&first, &second}) {
        auto msgs = p->violations(2, &fs);
        if (!msgs.empty()) throw InternalError("chain routing invalid: " + msgs.front());
    }
    if (first.front() != chain.u || first.back() != chain.v || second.front() != chain.x ||
        second.back() != chain.y)
        throw InternalError("chain routing ends misplaced");
    return {first, second};
}

}  // namespace bhdpc
