#include "bhdpc/constructor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bhdpc/basecase.hpp"
#include "bhdpc/errors.hpp"
#include "bhdpc/hampath.hpp"
#include "bhdpc/verify.hpp"

// The solver splits along one dimension into four parts B0..B3 (relative to
// the part holding s1), routes each part with a recursive cover, a full
// path, or a found structure, and splices the pieces through selected
// fault-free dimension-k edges. Geometry used throughout: a side-0 vertex of
// part i has both of its k-edges into part i+1, a side-1 vertex into part
// i-1, the two ends of those edges form a twin pair, and twins never leave
// their part. Terminal layouts are first renamed into a 30-entry dispatch
// table by optionally swapping the two path labels and/or swapping sources
// with sinks through the side-swapping reflection.

namespace bhdpc {
namespace {

std::vector<Vertex> rv(std::vector<Vertex> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

void app(std::vector<Vertex>& out, const std::vector<Vertex>& s) {
    out.insert(out.end(), s.begin(), s.end());
}

void app(std::vector<Vertex>& out, std::initializer_list<Vertex> s) {
    out.insert(out.end(), s.begin(), s.end());
}

bool holds(const std::vector<Vertex>& vs, const Vertex& v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::vector<Vertex> drop_front(const Path& p) {
    return {p.vertices.begin() + 1, p.vertices.end()};
}

std::vector<Vertex> drop_back(const Path& p) {
    return {p.vertices.begin(), p.vertices.end() - 1};
}

Path pjoin(std::initializer_list<const Path*> segs) {
    Path out;
    for (const Path* s : segs) app(out.vertices, s->vertices);
    return out;
}

// Both dimension-k edges at v, lexicographic.
std::vector<Vertex> dim_partners(const Vertex& v, int n, int k) {
    std::vector<Vertex> out;
    for (const Vertex& w : neighbors(v, n))
        if (edge_dimension(v, w) == k) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Edge> scan_cross(const SubcubeSplit& sp, int i, const FaultSet& faults,
                               const std::vector<Vertex>& forbid_endpoints,
                               const std::vector<Edge>& forbid_edges, int skip) {
    for (const Edge& e : sp.cross[((i % 4) + 4) % 4]) {
        if (faults.contains(e)) continue;
        if (holds(forbid_endpoints, e.u) || holds(forbid_endpoints, e.v)) continue;
        if (std::find(forbid_edges.begin(), forbid_edges.end(), e) != forbid_edges.end())
            continue;
        if (skip-- == 0) return e;
    }
    return std::nullopt;
}

// Signals out of a case body. A block's order-2 instance can be genuinely
// unsolvable for one derived terminal layout, and a selection site can run
// dry; both send the driver on to the next tweak of the selections.
struct ChildInfeasible {
    int block = 0;
    std::optional<Vertex> witness;
};
struct RetryMiss {
    std::string role;
};

// A path edge removed from a block-0 cover path so that the path can detour
// through the other three blocks. head and tail keep the host's direction;
// lo/hi are the side-0/side-1 ends of the removed edge and out_lo/out_hi
// their selected partners in blocks 1 and 3.
struct BreakCut {
    int host = 0;
    std::vector<Vertex> head, tail;
    Vertex lo, hi, out_lo, out_hi;
};

// Reassemble the cut host around a three-block detour. The segments are
// oriented for a block-3-first traversal (each from its side-0 entry to its
// side-1 exit); when the cut is met from its side-0 end the detour runs
// through block 1 first and every segment reverses.
Path weave(const BreakCut& br, const Path& seg3, const Path& seg2, const Path& seg1) {
    Path out;
    out.vertices = br.head;
    if (out.vertices.back().side() == 1) {
        app(out.vertices, seg3.vertices);
        app(out.vertices, seg2.vertices);
        app(out.vertices, seg1.vertices);
    } else {
        app(out.vertices, rv(seg1.vertices));
        app(out.vertices, rv(seg2.vertices));
        app(out.vertices, rv(seg3.vertices));
    }
    app(out.vertices, br.tail);
    return out;
}

Dpc2 solve_impl(int n, const FaultSet& F, const Terminals& T, CasePlan* plan);

// Working state of one recursion level, after renaming. Blocks are
// addressed relative to alpha, the part holding s1. Every selection helper
// is a "site": the retry driver can make any single site skip its first
// few candidates, which is how a downstream dead end shifts the choices
// that fed it.
struct Frame {
    int n, m, k, alpha;
    const SubcubeSplit& sp;
    FaultSet F;
    Terminals T;
    CasePlan* plan;
    std::vector<int> tweaks;
    int site_no = 0;
    int max_sites = 0;

    Frame(int n_, int k_, int alpha_, const SubcubeSplit& sp_, FaultSet F_, Terminals T_,
          CasePlan* plan_)
        : n(n_), m(n_ - 1), k(k_), alpha(alpha_), sp(sp_), F(std::move(F_)), T(T_),
          plan(plan_) {}

    int blk(int i) const { return (alpha + i) & 3; }

    int skip_for_site() {
        const int s = site_no++;
        max_sites = std::max(max_sites, site_no);
        return s < static_cast<int>(tweaks.size()) ? tweaks[s] : 0;
    }

    void record(const std::string& role, const Vertex& x, const Vertex& y) {
        plan->picks.push_back({role, Edge(x, y)});
    }

    // First usable edge between blocks i and i+1, endpoints ordered
    // (side 0, side 1).
    std::pair<Vertex, Vertex> cross(int i, std::vector<Vertex> forbid, const std::string& role) {
        const int skip = skip_for_site();
        auto e = scan_cross(sp, blk(i), F, forbid, {}, skip);
        if (!e) throw RetryMiss{role};
        Vertex lo = sp.lower_endpoint(*e);
        Vertex hi = e->u == lo ? e->v : e->u;
        record(role, lo, hi);
        return {lo, hi};
    }

    // A fault-free dimension-k partner of v.
    Vertex partner(const Vertex& v, std::vector<Vertex> avoid, const std::string& role) {
        const int skip = skip_for_site();
        std::vector<Vertex> cand;
        for (const Vertex& w : dim_partners(v, n, k))
            if (!F.contains(v, w) && !holds(avoid, w)) cand.push_back(w);
        if (skip >= static_cast<int>(cand.size())) throw RetryMiss{role};
        record(role, v, cand[skip]);
        return cand[skip];
    }

    // A shared dimension-k partner of the twins a and c with both of its
    // k-edges fault-free.
    Vertex common_partner(const Vertex& a, const Vertex& c, const std::string& role) {
        const int skip = skip_for_site();
        std::vector<Vertex> cand;
        for (const Vertex& x : dim_partners(a, n, k))
            if (!F.contains(x, a) && !F.contains(x, c)) cand.push_back(x);
        if (skip >= static_cast<int>(cand.size())) throw RetryMiss{role};
        record(role, cand[skip], a);
        return cand[skip];
    }

    // The shared partner pair of the cycle twins b and d, ordered so the
    // first keeps fault-free edges to both and the second to b.
    std::pair<Vertex, Vertex> anchor_exits(const CycleAnchor& an) {
        const int skip = skip_for_site();
        const auto ws = dim_partners(an.b, n, k);
        std::vector<std::pair<Vertex, Vertex>> ok;
        for (const auto& [w, x] :
             {std::make_pair(ws[0], ws[1]), std::make_pair(ws[1], ws[0])})
            if (!F.contains(w, an.b) && !F.contains(w, an.d) && !F.contains(x, an.b))
                ok.push_back({w, x});
        if (skip >= static_cast<int>(ok.size())) throw RetryMiss{"u2/v2"};
        record("u2", ok[skip].first, an.b);
        record("v2", ok[skip].second, an.b);
        return ok[skip];
    }

    // Recursive cover of block i with the given path ends, lifted back to
    // the enclosing coordinates. p1 runs cs1 -> ct1, p2 runs cs2 -> ct2.
    Dpc2 dpc(int i, const Vertex& cs1, const Vertex& ct1, const Vertex& cs2,
             const Vertex& ct2) {
        const int p = blk(i);
        Terminals ct;
        ct.s1 = sp.down(cs1);
        ct.t1 = sp.down(ct1);
        ct.s2 = sp.down(cs2);
        ct.t2 = sp.down(ct2);
        FaultSet fp = sp.faults_in_part(F, p);
        try {
            ct.check(m);
        } catch (const InputError& e) {
            throw InternalError("block " + std::to_string(i) + " got invalid path ends: " +
                                e.what());
        }
        Dpc2 r;
        if (m == 2) {
            Bh2Result b = solve_bh2(fp, ct);
            if (!b.solved) {
                std::optional<Vertex> w;
                if (b.witness) w = sp.up(p, *b.witness);
                throw ChildInfeasible{i, w};
            }
            r = b.dpc;
        } else {
            r = solve_impl(m, fp, ct, nullptr);
        }
        Dpc2 out;
        out.p1.vertices = sp.up(p, r.p1.vertices);
        out.p2.vertices = sp.up(p, r.p2.vertices);
        return out;
    }

    // Full fault-free path through block i from x to y, lifted.
    Path ham(int i, const Vertex& x, const Vertex& y) {
        const int p = blk(i);
        HamQuery q;
        q.n = m;
        q.faults = sp.faults_in_part(F, p);
        q.x = sp.down(x);
        q.y = sp.down(y);
        HamResult r = ham_path(q);
        if (r.status == HamStatus::BudgetExceeded)
            throw InternalError("block " + std::to_string(i) +
                                " full-path search ran out of budget");
        if (!r.found())
            throw InternalError("block " + std::to_string(i) + " has no fault-free full path " +
                                x.str() + " .. " + y.str());
        Path out;
        out.vertices = sp.up(p, r.path.vertices);
        return out;
    }

    // Make the second vertex from one end of a cover path able to leave the
    // block on a fault-free dimension-k edge, and return the far endpoint.
    // When the direct edges are faulty the vertex may be transposed with its
    // twin across the cover: twins share their whole neighborhood and are
    // never path ends here, so only the four reattachment edges need to be
    // fault-free.
    Vertex fix_exit(Dpc2& c, bool on_p1, bool at_back, std::vector<Vertex> avoid,
                    const std::string& role) {
        const int skip = skip_for_site();
        Path& P = on_p1 ? c.p1 : c.p2;
        auto& V = P.vertices;
        const size_t pos = at_back ? V.size() - 2 : 1;
        Vertex exit = V[pos];
        const Vertex ends[4] = {c.p1.front(), c.p1.back(), c.p2.front(), c.p2.back()};
        auto is_end = [&](const Vertex& v) {
            return v == ends[0] || v == ends[1] || v == ends[2] || v == ends[3];
        };
        struct Cand {
            Vertex out;
            bool swapped;
        };
        std::vector<Cand> cand;
        for (const Vertex& w : dim_partners(exit, n, k))
            if (!F.contains(exit, w) && !holds(avoid, w)) cand.push_back({w, false});
        const Vertex tw = twin(exit);
        Path* q = nullptr;
        size_t qj = 0;
        if (!is_end(exit) && !is_end(tw)) {
            for (Path* pp : {&c.p1, &c.p2}) {
                auto it = std::find(pp->vertices.begin(), pp->vertices.end(), tw);
                if (it != pp->vertices.end()) {
                    q = pp;
                    qj = static_cast<size_t>(it - pp->vertices.begin());
                    break;
                }
            }
            if (q && !F.contains(tw, V[pos - 1]) && !F.contains(tw, V[pos + 1]) &&
                !F.contains(exit, q->vertices[qj - 1]) &&
                !F.contains(exit, q->vertices[qj + 1])) {
                for (const Vertex& w : dim_partners(tw, n, k))
                    if (!F.contains(tw, w) && !holds(avoid, w)) cand.push_back({w, true});
            }
        }
        if (skip >= static_cast<int>(cand.size())) throw RetryMiss{role};
        const Cand ch = cand[skip];
        if (ch.swapped) {
            q->vertices[qj] = exit;
            V[pos] = tw;
            exit = tw;
        }
        record(role, exit, ch.out);
        return ch.out;
    }

    // Scan the hosts in order for a removable edge whose two ends can leave
    // block 0 on fault-free dimension-k edges, subject to the avoid lists.
    BreakCut cut(std::initializer_list<Path*> hosts, std::vector<Vertex> avoid_lo,
                 std::vector<Vertex> avoid_hi, const std::string& role_lo,
                 const std::string& role_hi) {
        int skip = skip_for_site();
        int host_idx = 0;
        for (Path* hp : hosts) {
            const auto& V = hp->vertices;
            for (size_t j = 0; j + 1 < V.size(); ++j) {
                const Vertex& lo = V[j].side() == 0 ? V[j] : V[j + 1];
                const Vertex& hi = V[j].side() == 0 ? V[j + 1] : V[j];
                std::optional<Vertex> ol, oh;
                for (const Vertex& w : dim_partners(lo, n, k))
                    if (!F.contains(lo, w) && !holds(avoid_lo, w)) {
                        ol = w;
                        break;
                    }
                for (const Vertex& w : dim_partners(hi, n, k))
                    if (!F.contains(hi, w) && !holds(avoid_hi, w)) {
                        oh = w;
                        break;
                    }
                if (!ol || !oh) continue;
                if (skip-- > 0) continue;
                BreakCut bc;
                bc.host = host_idx;
                bc.head.assign(V.begin(), V.begin() + j + 1);
                bc.tail.assign(V.begin() + j + 1, V.end());
                bc.lo = lo;
                bc.hi = hi;
                bc.out_lo = *ol;
                bc.out_hi = *oh;
                record("cut", lo, hi);
                record(role_lo, lo, *ol);
                record(role_hi, hi, *oh);
                return bc;
            }
            ++host_idx;
        }
        throw RetryMiss{role_lo + "+" + role_hi};
    }
};

// ---- terminal layout constructions ----
//
// Layout tags are keyed on the relative blocks of (s2, t1, t2); s1 sits in
// block 0 and sources are on side 0. Within a construction, uX/vX name
// side-0 vertices of block X and aX/bX side-1 vertices; a cross pick "u0a1"
// selects the edge u0 -> a1 between blocks 0 and 1.

Dpc2 case_1_1(Frame& f) {
    const Terminals& T = f.T;
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [u2, a3] = f.cross(2, {T.t2}, "u2a3");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, b0);
    Dpc2 c3 = f.dpc(3, u3, T.t2, v3, a3);
    Path h1 = f.ham(1, T.s2, a1);
    Path h2 = f.ham(2, u2, T.t1);
    return {pjoin({&c0.p2, &c3.p2, &h2}), pjoin({&h1, &c0.p1, &c3.p1})};
}

Dpc2 case_1_2(Frame& f) {
    const Terminals& T = f.T;
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [u2, a3] = f.cross(2, {T.t1}, "u2a3");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, b0);
    Dpc2 c3 = f.dpc(3, v3, T.t1, u3, a3);
    Path h1 = f.ham(1, T.s2, a1);
    Path h2 = f.ham(2, u2, T.t2);
    return {pjoin({&c0.p2, &c3.p1}), pjoin({&h1, &c0.p1, &c3.p2, &h2})};
}

Dpc2 case_1_3(Frame& f) {
    const Terminals& T = f.T;
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u0, a1] = f.cross(0, {T.s1, T.t1}, "u0a1");
    auto [u2, a3] = f.cross(2, {T.s2, T.t2}, "u2a3");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, b0);
    Dpc2 c1 = f.dpc(1, v1, T.t1, u1, a1);
    Dpc2 c2 = f.dpc(2, u2, b2, T.s2, a2);
    Dpc2 c3 = f.dpc(3, v3, a3, u3, T.t2);
    return {pjoin({&c0.p2, &c3.p1, &c2.p1, &c1.p1}),
            pjoin({&c2.p2, &c1.p2, &c0.p1, &c3.p2})};
}

Dpc2 case_1_4(Frame& f) {
    const Terminals& T = f.T;
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    Path h0 = f.ham(0, T.s1, a0);
    Path h3 = f.ham(3, u3, T.t1);
    Path h2 = f.ham(2, T.s2, a2);
    Path h1 = f.ham(1, u1, T.t2);
    return {pjoin({&h0, &h3}), pjoin({&h2, &h1})};
}

Dpc2 case_2_1_1(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {T.s2}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    Path h0 = f.ham(0, T.s1, T.t1);
    BreakCut cut = f.cut({&h0}, {T.t2}, {}, "u0a1", "u3a0");
    Dpc2 c1 = f.dpc(1, u1, cut.out_lo, T.s2, T.t2);
    Path h2 = f.ham(2, u2, a2);
    Path h3 = f.ham(3, cut.out_hi, a3);
    return {weave(cut, h3, h2, c1.p1), c1.p2};
}

Dpc2 case_2_1_2(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1, T.t1}, "u0a1");
    auto [u1, a2] = f.cross(1, {T.s2}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [u3, a0] = f.cross(3, {T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, u0, T.t2);
    Dpc2 c1 = f.dpc(1, u1, T.t1, T.s2, a1);
    Path h2 = f.ham(2, u2, a2);
    Path h3 = f.ham(3, u3, a3);
    return {pjoin({&c0.p1, &h3, &h2, &c1.p1}), pjoin({&c1.p2, &c0.p2})};
}

Dpc2 case_2_1_3(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {T.t2}, "u1a2");
    auto [u2, a3] = f.cross(2, {T.s2}, "u2a3");
    Path h0 = f.ham(0, T.s1, T.t1);
    BreakCut cut = f.cut({&h0}, {}, {}, "u0a1", "u3a0");
    Dpc2 c2 = f.dpc(2, u2, a2, T.s2, T.t2);
    Path h1 = f.ham(1, u1, cut.out_lo);
    Path h3 = f.ham(3, cut.out_hi, a3);
    return {weave(cut, h3, c2.p1, h1), c2.p2};
}

Dpc2 case_2_1_4(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [u1, a2] = f.cross(1, {T.t1}, "u1a2");
    auto [u2, a3] = f.cross(2, {T.s2}, "u2a3");
    auto [u3, a0] = f.cross(3, {T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, u0, T.t2);
    Dpc2 c2 = f.dpc(2, u2, T.t1, T.s2, a2);
    Path h1 = f.ham(1, u1, a1);
    Path h3 = f.ham(3, u3, a3);
    return {pjoin({&c0.p1, &h3, &c2.p1}), pjoin({&c2.p2, &h1, &c0.p2})};
}

Dpc2 case_2_1_5(Frame& f) {
    const Terminals& T = f.T;
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    Dpc2 c0 = f.dpc(0, T.s1, a0, T.s2, b0);
    Dpc2 c1 = f.dpc(1, u1, T.t1, v1, T.t2);
    Dpc2 c2 = f.dpc(2, u2, a2, v2, b2);
    Dpc2 c3 = f.dpc(3, u3, a3, v3, b3);
    return {pjoin({&c0.p1, &c3.p1, &c2.p1, &c1.p1}),
            pjoin({&c0.p2, &c3.p2, &c2.p2, &c1.p2})};
}

// Two sinks share block 2 while both sources sit in block 0. Block 3 is
// routed by a found cycle-plus-path structure whose 4-cycle bridges the two
// cover paths.
Dpc2 case_2_1_6(Frame& f) {
    const Terminals& T = f.T;
    CycleAnchor an = find_cycle_anchor(f.n, f.F, f.k, f.blk(3));
    f.plan->anchor = an;
    Vertex a0 = f.common_partner(an.a, an.c, "a0");
    Vertex b0 = f.partner(an.u, {}, "b0");
    auto [u2, v2] = f.anchor_exits(an);
    Dpc2 c0 = f.dpc(0, T.s1, a0, T.s2, b0);
    Dpc2 c2 = f.dpc(2, u2, T.t1, v2, T.t2);
    Vertex a1 = f.fix_exit(c0, true, true, {}, "u0a1");
    Vertex u1 = f.fix_exit(c2, true, false, {}, "u1a2");
    Path h1 = f.ham(1, a1, u1);
    Dpc2 out;
    out.p1.vertices = drop_back(c0.p1);
    app(out.p1.vertices, h1.vertices);
    app(out.p1.vertices, drop_front(c2.p1));
    out.p2.vertices = c0.p2.vertices;
    app(out.p2.vertices, an.p.vertices);
    app(out.p2.vertices, {a0, an.c, an.d, u2, an.b});
    app(out.p2.vertices, c2.p2.vertices);
    return out;
}

// Both sinks crowd block 3: a bridged two-path cover of that block carries
// them, and its bridge pair is walked between the two lifted paths.
Dpc2 case_2_1_7(Frame& f) {
    const Terminals& T = f.T;
    BridgedPartCover cv = find_bridged_cover(f.n, f.F, f.k, f.blk(3), T.t1, T.t2);
    f.plan->cover = cv;
    Vertex a0 = f.common_partner(cv.a, cv.c, "a0");
    Vertex b0 = f.partner(cv.u, {}, "b0");
    Vertex u2 = f.partner(cv.b, {}, "u2");
    Dpc2 c0 = f.dpc(0, T.s1, a0, T.s2, b0);
    Vertex a1 = f.fix_exit(c0, true, true, {}, "u0a1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    Path h1 = f.ham(1, a1, u1);
    Path h2 = f.ham(2, a2, u2);
    const Path q_tail = split_path_at(cv.q, 1).second;  // a -> t1
    Dpc2 out;
    out.p1.vertices = drop_back(c0.p1);  // s1 -> u0
    app(out.p1.vertices, h1.vertices);
    app(out.p1.vertices, h2.vertices);
    app(out.p1.vertices, {cv.b, cv.c, a0});
    app(out.p1.vertices, q_tail.vertices);
    out.p2 = pjoin({&c0.p2, &cv.p});
    return out;
}

Dpc2 case_2_2_1_1(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1, T.t2}, "u0a1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u2, a3] = f.cross(2, {T.s2}, "u2a3");
    auto [u3, a0] = f.cross(3, {T.t1}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, u0, T.t1);
    Dpc2 c1 = f.dpc(1, u1, a1, v1, T.t2);
    Dpc2 c2 = f.dpc(2, u2, a2, T.s2, b2);
    Path h3 = f.ham(3, u3, a3);
    return {pjoin({&c0.p1, &h3, &c2.p1, &c1.p1, &c0.p2}), pjoin({&c2.p2, &c1.p2})};
}

Dpc2 case_2_2_1_2(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    Path h0 = f.ham(0, T.s1, T.t1);
    Path h1 = f.ham(1, u1, T.t2);
    Path h2 = f.ham(2, u2, a2);
    Path h3 = f.ham(3, T.s2, a3);
    return {h0, pjoin({&h3, &h2, &h1})};
}

Dpc2 case_2_2_1_3(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [u1, a2] = f.cross(1, {T.t2}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.s2, T.t1}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, u0, T.t1);
    Dpc2 c2 = f.dpc(2, u2, a2, v2, T.t2);
    Dpc2 c3 = f.dpc(3, u3, a3, T.s2, b3);
    Path h1 = f.ham(1, u1, a1);
    return {pjoin({&c0.p1, &c3.p1, &c2.p1, &h1, &c0.p2}), pjoin({&c3.p2, &c2.p2})};
}

Dpc2 case_2_2_1_4(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [v1, b2] = f.cross(1, {T.s2, T.t2}, "v1b2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.t1}, "u3a0");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, T.t1);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {a1}, {u3}, "v0b1", "v3b0");
    Dpc2 c1 = f.dpc(1, v1, cut.out_lo, T.s2, a1);
    Dpc2 c2 = f.dpc(2, v2, b2, u2, T.t2);
    Dpc2 c3 = f.dpc(3, cut.out_hi, b3, u3, a3);
    Path w = weave(cut, c3.p1, c2.p1, c1.p1);
    if (cut.host == 0) return {w, pjoin({&c1.p2, &c0.p1, &c3.p2, &c2.p2})};
    return {c0.p2, pjoin({&c1.p2, &w, &c3.p2, &c2.p2})};
}

Dpc2 case_2_2_1_5(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [v1, b2] = f.cross(1, {T.s2}, "v1b2");
    auto [v2, b3] = f.cross(2, {T.t2}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.t1}, "u3a0");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, T.t1);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {a1}, {u3}, "v0b1", "v3b0");
    Dpc2 c1 = f.dpc(1, v1, cut.out_lo, T.s2, a1);
    Dpc2 c3 = f.dpc(3, u3, T.t2, cut.out_hi, b3);
    Path h2 = f.ham(2, v2, b2);
    Path w = weave(cut, c3.p2, h2, c1.p1);
    if (cut.host == 0) return {w, pjoin({&c1.p2, &c0.p1, &c3.p1})};
    return {c0.p2, pjoin({&c1.p2, &w, &c3.p1})};
}

Dpc2 case_2_2_1_6(Frame& f) {
    const Terminals& T = f.T;
    auto [u0, a1] = f.cross(0, {T.s1}, "u0a1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [v2, b3] = f.cross(2, {T.s2, T.t2}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.t1}, "u3a0");
    Dpc2 c0 = f.dpc(0, u0, a0, T.s1, T.t1);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {a1}, {u3}, "v0b1", "v3b0");
    Dpc2 c1 = f.dpc(1, v1, cut.out_lo, u1, a1);
    Dpc2 c2 = f.dpc(2, v2, b2, T.s2, a2);
    Dpc2 c3 = f.dpc(3, cut.out_hi, b3, u3, T.t2);
    Path w = weave(cut, c3.p1, c2.p1, c1.p1);
    if (cut.host == 0) return {w, pjoin({&c2.p2, &c1.p2, &c0.p1, &c3.p2})};
    return {c0.p2, pjoin({&c2.p2, &c1.p2, &w, &c3.p2})};
}

Dpc2 case_2_2_2_1(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1, T.t1}, "v0b1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u2, a3] = f.cross(2, {T.s2}, "u2a3");
    auto [u3, a0] = f.cross(3, {T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, v0, T.t2);
    Dpc2 c1 = f.dpc(1, u1, T.t1, v1, b1);
    Dpc2 c2 = f.dpc(2, u2, a2, T.s2, b2);
    Path h3 = f.ham(3, u3, a3);
    return {pjoin({&c0.p1, &h3, &c2.p1, &c1.p1}), pjoin({&c2.p2, &c1.p2, &c0.p2})};
}

Dpc2 case_2_2_2_2(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1, T.t1}, "v0b1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.s2, T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, v0, T.t2);
    Dpc2 c1 = f.dpc(1, u1, T.t1, v1, b1);
    Dpc2 c2 = f.dpc(2, u2, a2, v2, b2);
    Dpc2 c3 = f.dpc(3, u3, a3, T.s2, b3);
    return {pjoin({&c0.p1, &c3.p1, &c2.p1, &c1.p1}),
            pjoin({&c3.p2, &c2.p2, &c1.p2, &c0.p2})};
}

Dpc2 case_2_2_2_3(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [u3, a0] = f.cross(3, {T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, v0, T.t2);
    Path h1 = f.ham(1, T.s2, b1);
    Path h2 = f.ham(2, u2, T.t1);
    Path h3 = f.ham(3, u3, a3);
    return {pjoin({&c0.p1, &h3, &h2}), pjoin({&h1, &c0.p2})};
}

Dpc2 case_2_2_2_4(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [v1, b2] = f.cross(1, {T.t1}, "v1b2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    auto [u3, a0] = f.cross(3, {T.s2, T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, v0, T.t2);
    Dpc2 c2 = f.dpc(2, u2, T.t1, v2, b2);
    Dpc2 c3 = f.dpc(3, u3, a3, T.s2, b3);
    Path h1 = f.ham(1, v1, b1);
    return {pjoin({&c0.p1, &c3.p1, &c2.p1}), pjoin({&c3.p2, &c2.p2, &h1, &c0.p2})};
}

Dpc2 case_2_2_2_5(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [u1, a2] = f.cross(1, {T.s2}, "u1a2");
    auto [u2, a3] = f.cross(2, {T.t1}, "u2a3");
    auto [v3, a0] = f.cross(3, {T.t2}, "v3a0");
    Dpc2 c0 = f.dpc(0, v0, T.t2, T.s1, a0);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {b1}, {v3}, "u0a1", "u3b0");
    Dpc2 c1 = f.dpc(1, u1, cut.out_lo, T.s2, b1);
    Dpc2 c3 = f.dpc(3, v3, T.t1, cut.out_hi, a3);
    Path h2 = f.ham(2, u2, a2);
    Path w = weave(cut, c3.p2, h2, c1.p1);
    if (cut.host == 0) return {pjoin({&w, &c3.p1}), pjoin({&c1.p2, &c0.p1})};
    return {pjoin({&c0.p2, &c3.p1}), pjoin({&c1.p2, &w})};
}

Dpc2 case_2_2_2_6(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [v1, b2] = f.cross(1, {}, "v1b2");
    auto [u3, a0] = f.cross(3, {T.t2}, "u3a0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, v0, T.t2);
    Path h1 = f.ham(1, v1, b1);
    Path h2 = f.ham(2, T.s2, b2);
    Path h3 = f.ham(3, u3, T.t1);
    return {pjoin({&c0.p1, &h3}), pjoin({&h2, &h1, &c0.p2})};
}

Dpc2 case_2_2_3_1(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {T.t2}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    auto [v2, b3] = f.cross(2, {u2, a3}, "v2b3");
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, T.s2, b0);
    Dpc2 c2 = f.dpc(2, u2, a2, v2, T.t2);
    Dpc2 c3 = f.dpc(3, u3, a3, v3, b3);
    Path h1 = f.ham(1, u1, T.t1);
    return {pjoin({&c0.p1, &c3.p1, &c2.p1, &h1}), pjoin({&c0.p2, &c3.p2, &c2.p2})};
}

Dpc2 case_2_2_3_2(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [u2, a3] = f.cross(2, {T.t2}, "u2a3");
    auto [u3, a0] = f.cross(3, {}, "u3a0");
    auto [v3, b0] = f.cross(3, {u3, a0}, "v3b0");
    Dpc2 c0 = f.dpc(0, T.s1, a0, T.s2, b0);
    Dpc2 c3 = f.dpc(3, u3, a3, v3, T.t2);
    Path h1 = f.ham(1, u1, T.t1);
    Path h2 = f.ham(2, u2, a2);
    return {pjoin({&c0.p1, &c3.p1, &h2, &h1}), pjoin({&c0.p2, &c3.p2})};
}

// Both sources share block 0 with both sinks far away: a bridged cover of
// block 0 (mirrored chirality, terminals on side 0) is opened at its bridge
// and threaded through the other blocks.
Dpc2 case_2_2_3_3(Frame& f) {
    const Terminals& T = f.T;
    BridgedPartCover cv = find_bridged_cover(f.n, f.F, f.k, f.blk(0), T.s1, T.s2);
    f.plan->cover = cv;
    Vertex u3 = f.common_partner(cv.a, cv.c, "u3");
    Vertex a1 = f.partner(cv.b, {}, "a1");
    Vertex v3 = f.partner(cv.u, {}, "v3");
    auto [u2, a3] = f.cross(2, {T.t2}, "u2a3");
    Dpc2 c3 = f.dpc(3, v3, T.t2, u3, a3);
    Vertex v2 = f.fix_exit(c3, false, false, {u2}, "v2b3");
    auto [u1, a2] = f.cross(1, {T.t1}, "u1a2");
    Dpc2 c2 = f.dpc(2, u2, T.t1, v2, a2);
    Path h1 = f.ham(1, a1, u1);
    const Path q_tail = split_path_at(cv.q, 1).second;  // a -> s1
    Dpc2 out;
    out.p1.vertices = rv(q_tail.vertices);  // s1 -> a
    app(out.p1.vertices, {u3, cv.c, cv.b});
    app(out.p1.vertices, h1.vertices);          // a1 -> u1
    app(out.p1.vertices, rv(c2.p2.vertices));   // a2 -> v2
    app(out.p1.vertices, drop_front(c3.p2));    // b3 -> a3
    app(out.p1.vertices, c2.p1.vertices);       // u2 -> t1
    out.p2.vertices = rv(cv.p.vertices);        // s2 -> u
    app(out.p2.vertices, c3.p1.vertices);       // v3 -> t2
    return out;
}

Dpc2 case_3_1(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [u1, a2] = f.cross(1, {T.s2}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    Dpc2 c0 = f.dpc(0, v0, T.t2, T.s1, T.t1);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {b1}, {}, "u0a1", "u3a0");
    Dpc2 c1 = f.dpc(1, u1, cut.out_lo, T.s2, b1);
    Path h2 = f.ham(2, u2, a2);
    Path h3 = f.ham(3, cut.out_hi, a3);
    Path w = weave(cut, h3, h2, c1.p1);
    if (cut.host == 0) return {w, pjoin({&c1.p2, &c0.p1})};
    return {c0.p2, pjoin({&c1.p2, &w})};
}

Dpc2 case_3_2(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [v1, b2] = f.cross(1, {u1, a2}, "v1b2");
    auto [u2, a3] = f.cross(2, {T.s2}, "u2a3");
    Dpc2 c0 = f.dpc(0, v0, T.t2, T.s1, T.t1);
    BreakCut cut = f.cut({&c0.p2, &c0.p1}, {b1}, {}, "u0a1", "u3a0");
    Dpc2 c1 = f.dpc(1, u1, cut.out_lo, v1, b1);
    Dpc2 c2 = f.dpc(2, u2, a2, T.s2, b2);
    Path h3 = f.ham(3, cut.out_hi, a3);
    Path w = weave(cut, h3, c2.p1, c1.p1);
    if (cut.host == 0) return {w, pjoin({&c2.p2, &c1.p2, &c0.p1})};
    return {c0.p2, pjoin({&c2.p2, &c1.p2, &w})};
}

Dpc2 case_3_3(Frame& f) {
    const Terminals& T = f.T;
    auto [v0, b1] = f.cross(0, {T.s1}, "v0b1");
    auto [v1, b2] = f.cross(1, {}, "v1b2");
    auto [v2, b3] = f.cross(2, {}, "v2b3");
    Dpc2 c0 = f.dpc(0, T.s1, T.t1, v0, T.t2);
    Path h1 = f.ham(1, v1, b1);
    Path h2 = f.ham(2, v2, b2);
    Path h3 = f.ham(3, T.s2, b3);
    return {c0.p1, pjoin({&h3, &h2, &h1, &c0.p2})};
}

Dpc2 case_4(Frame& f) {
    const Terminals& T = f.T;
    auto [u1, a2] = f.cross(1, {}, "u1a2");
    auto [u2, a3] = f.cross(2, {}, "u2a3");
    Dpc2 c0 = f.dpc(0, T.s1, T.t1, T.s2, T.t2);
    BreakCut cut = f.cut({&c0.p1, &c0.p2}, {}, {}, "u0a1", "u3a0");
    Path h1 = f.ham(1, u1, cut.out_lo);
    Path h2 = f.ham(2, u2, a2);
    Path h3 = f.ham(3, cut.out_hi, a3);
    Path w = weave(cut, h3, h2, h1);
    if (cut.host == 0) return {w, c0.p2};
    return {c0.p1, w};
}

Dpc2 run_case(Frame& f) {
    const std::string& tag = f.plan->tag;
    if (tag == "1.1") return case_1_1(f);
    if (tag == "1.2") return case_1_2(f);
    if (tag == "1.3") return case_1_3(f);
    if (tag == "1.4") return case_1_4(f);
    if (tag == "2.1.1") return case_2_1_1(f);
    if (tag == "2.1.2") return case_2_1_2(f);
    if (tag == "2.1.3") return case_2_1_3(f);
    if (tag == "2.1.4") return case_2_1_4(f);
    if (tag == "2.1.5") return case_2_1_5(f);
    if (tag == "2.1.6") return case_2_1_6(f);
    if (tag == "2.1.7") return case_2_1_7(f);
    if (tag == "2.2.1.1") return case_2_2_1_1(f);
    if (tag == "2.2.1.2") return case_2_2_1_2(f);
    if (tag == "2.2.1.3") return case_2_2_1_3(f);
    if (tag == "2.2.1.4") return case_2_2_1_4(f);
    if (tag == "2.2.1.5") return case_2_2_1_5(f);
    if (tag == "2.2.1.6") return case_2_2_1_6(f);
    if (tag == "2.2.2.1") return case_2_2_2_1(f);
    if (tag == "2.2.2.2") return case_2_2_2_2(f);
    if (tag == "2.2.2.3") return case_2_2_2_3(f);
    if (tag == "2.2.2.4") return case_2_2_2_4(f);
    if (tag == "2.2.2.5") return case_2_2_2_5(f);
    if (tag == "2.2.2.6") return case_2_2_2_6(f);
    if (tag == "2.2.3.1") return case_2_2_3_1(f);
    if (tag == "2.2.3.2") return case_2_2_3_2(f);
    if (tag == "2.2.3.3") return case_2_2_3_3(f);
    if (tag == "3.1") return case_3_1(f);
    if (tag == "3.2") return case_3_2(f);
    if (tag == "3.3") return case_3_3(f);
    if (tag == "4") return case_4(f);
    throw InternalError("no construction for layout " + tag);
}

// Run the layout construction, retrying with shifted selections when a
// block's sixteen-vertex instance lands on its one unsolvable pattern or a
// selection runs dry. Tweaks shift one site at a time first, then pairs of
// sites ordered by total shift; every construction has an upstream site for
// each block it derives path ends for, so a failing block is always
// reachable. Sites reject shifts past their candidate pool, so the grid
// prunes itself.
Dpc2 drive(Frame& f) {
    std::string first_fail;
    auto attempt = [&]() -> std::optional<Dpc2> {
        f.site_no = 0;
        f.plan->picks.clear();
        f.plan->anchor.reset();
        f.plan->cover.reset();
        try {
            return run_case(f);
        } catch (const ChildInfeasible& ci) {
            if (first_fail.empty())
                first_fail = "block " + std::to_string(ci.block) +
                             " base layout unsolvable" +
                             (ci.witness ? " (blocked at " + ci.witness->str() + ")" : "");
        } catch (const RetryMiss& rm) {
            if (first_fail.empty()) first_fail = "no candidate for " + rm.role;
        }
        return std::nullopt;
    };
    f.tweaks.clear();
    if (auto d = attempt()) return *d;
    constexpr int kMaxShift = 12;
    for (int bump = 1; bump <= kMaxShift; ++bump) {
        const int sites = f.max_sites;
        for (int s = 0; s < sites; ++s) {
            f.tweaks.assign(static_cast<size_t>(sites), 0);
            f.tweaks[s] = bump;
            if (auto d = attempt()) return *d;
        }
    }
    for (int total = 2; total <= kMaxShift; ++total) {
        const int sites = f.max_sites;
        for (int a = 0; a < sites; ++a) {
            for (int b = a + 1; b < sites; ++b) {
                for (int ba = 1; ba < total; ++ba) {
                    f.tweaks.assign(static_cast<size_t>(sites), 0);
                    f.tweaks[a] = ba;
                    f.tweaks[b] = total - ba;
                    if (auto d = attempt()) return *d;
                }
            }
        }
    }
    throw InternalError("selection retries exhausted; first failure: " + first_fail);
}

// ---- renaming into the dispatch frame ----

enum class Rename { kSides, kPairs, kRoles };

const char* rename_name(Rename r) {
    switch (r) {
        case Rename::kSides: return "sides";
        case Rename::kPairs: return "pairs";
        default: return "roles";
    }
}

FaultSet flip_faults(const FaultSet& F) {
    FaultSet nf;
    for (const Edge& e : F.edges) nf.insert(Edge(parity_flip(e.u), parity_flip(e.v)));
    return nf;
}

// kSides conjugates the instance through the side-swapping reflection so the
// sources land on the even side the layouts assume; roles stay put. kPairs
// swaps the two path labels. kRoles swaps sources with sinks through the same
// reflection; undoing it maps the paths back and reverses them.
void apply_rename(Rename r, FaultSet& F, Terminals& T) {
    if (r == Rename::kPairs) {
        std::swap(T.s1, T.s2);
        std::swap(T.t1, T.t2);
        return;
    }
    if (r == Rename::kSides) {
        T.s1 = parity_flip(T.s1);
        T.s2 = parity_flip(T.s2);
        T.t1 = parity_flip(T.t1);
        T.t2 = parity_flip(T.t2);
        F = flip_faults(F);
        return;
    }
    Terminals nt;
    nt.s1 = parity_flip(T.t1);
    nt.t1 = parity_flip(T.s1);
    nt.s2 = parity_flip(T.t2);
    nt.t2 = parity_flip(T.s2);
    T = nt;
    F = flip_faults(F);
}

void undo_rename(Rename r, Dpc2& d) {
    if (r == Rename::kPairs) {
        std::swap(d.p1, d.p2);
        return;
    }
    if (r == Rename::kSides) {
        for (Path* p : {&d.p1, &d.p2})
            for (Vertex& v : p->vertices) v = parity_flip(v);
        return;
    }
    for (Path* p : {&d.p1, &d.p2}) {
        for (Vertex& v : p->vertices) v = parity_flip(v);
        std::reverse(p->vertices.begin(), p->vertices.end());
    }
}

// Terminal layouts keyed by the relative parts of (s2, t1, t2); s1 defines
// part 0. Every placement of four terminals reaches this table under at
// most one pair swap and one role swap.
const std::map<std::array<int, 3>, const char*>& case_table() {
    static const std::map<std::array<int, 3>, const char*> t = {
        {{1, 2, 3}, "1.1"},     {{1, 3, 2}, "1.2"},     {{2, 1, 3}, "1.3"},
        {{2, 3, 1}, "1.4"},     {{1, 0, 1}, "2.1.1"},   {{1, 1, 0}, "2.1.2"},
        {{2, 0, 2}, "2.1.3"},   {{2, 2, 0}, "2.1.4"},   {{0, 1, 1}, "2.1.5"},
        {{0, 2, 2}, "2.1.6"},   {{0, 3, 3}, "2.1.7"},   {{2, 0, 1}, "2.2.1.1"},
        {{3, 0, 1}, "2.2.1.2"}, {{3, 0, 2}, "2.2.1.3"}, {{1, 0, 2}, "2.2.1.4"},
        {{1, 0, 3}, "2.2.1.5"}, {{2, 0, 3}, "2.2.1.6"}, {{2, 1, 0}, "2.2.2.1"},
        {{3, 1, 0}, "2.2.2.2"}, {{1, 2, 0}, "2.2.2.3"}, {{3, 2, 0}, "2.2.2.4"},
        {{1, 3, 0}, "2.2.2.5"}, {{2, 3, 0}, "2.2.2.6"}, {{0, 1, 2}, "2.2.3.1"},
        {{0, 1, 3}, "2.2.3.2"}, {{0, 2, 3}, "2.2.3.3"}, {{1, 0, 0}, "3.1"},
        {{2, 0, 0}, "3.2"},     {{3, 0, 0}, "3.3"},     {{0, 0, 0}, "4"},
    };
    return t;
}

Dpc2 audit(int n, const FaultSet& F, const Terminals& T, Dpc2 d) {
    Instance inst;
    inst.n = n;
    inst.faults = F;
    inst.terminals = T;
    std::vector<std::string> bad = verify_dpc(inst, d);
    if (!bad.empty()) {
        std::string msg = "self-audit failed:";
        for (const std::string& b : bad) msg += " [" + b + "]";
        throw InternalError(msg);
    }
    return d;
}

Dpc2 solve_impl(int n, const FaultSet& F, const Terminals& T, CasePlan* plan) {
    CasePlan lp;
    lp.n = n;
    if (n == 2) {
        lp.tag = "base";
        try {
            Bh2Result r = solve_bh2(F, T);
            if (!r.solved)
                throw InternalError(
                    "base solver found no cover" +
                    std::string(r.witness ? " (blocked at " + r.witness->str() + ")" : ""));
            Dpc2 d = audit(2, F, T, std::move(r.dpc));
            if (plan) *plan = lp;
            return d;
        } catch (const InternalError& e) {
            throw InternalError("[" + lp.str() + "] " + e.what());
        }
    }
    const int k = choose_split_dimension(n, F, T);
    const SubcubeSplit sp = split(n, k);
    static const std::array<std::vector<Rename>, 4> orders = {
        {{}, {Rename::kPairs}, {Rename::kRoles}, {Rename::kRoles, Rename::kPairs}}};
    // the layouts assume sources on the even side; mirrored instances are
    // reflected first and the paths mapped back at the end
    const bool mirrored = T.s1.side() == 1;
    for (const auto& base_ops : orders) {
        std::vector<Rename> ops;
        if (mirrored) ops.push_back(Rename::kSides);
        ops.insert(ops.end(), base_ops.begin(), base_ops.end());
        FaultSet F2 = F;
        Terminals T2 = T;
        for (Rename op : ops) apply_rename(op, F2, T2);
        const int alpha = sp.part_of(T2.s1);
        auto pos = [&](const Vertex& v) { return (sp.part_of(v) - alpha + 4) & 3; };
        const std::array<int, 3> key = {pos(T2.s2), pos(T2.t1), pos(T2.t2)};
        const auto it = case_table().find(key);
        if (it == case_table().end()) continue;
        lp.k = k;
        lp.base_part = alpha;
        for (Rename op : ops) lp.renames.push_back(rename_name(op));
        lp.tag = it->second;
        Frame f(n, k, alpha, sp, std::move(F2), T2, &lp);
        try {
            Dpc2 d = drive(f);
            for (auto rit = ops.rbegin(); rit != ops.rend(); ++rit) undo_rename(*rit, d);
            d = audit(n, F, T, std::move(d));
            if (plan) *plan = lp;
            return d;
        } catch (const InternalError& e) {
            throw InternalError("[" + lp.str() + "] " + e.what());
        }
    }
    throw InternalError("no terminal layout matched at split " + std::to_string(k));
}

// At order 3 with one fault per dimension, splitting along d is refused when
// it would trap all four terminals in one part whose two inherited faults
// pin the 16-vertex solver's unsolvable pattern; the derived path ends of
// every other layout can be steered around it, but these four cannot.
bool risky_split(const FaultSet& F, const Terminals& T, int d) {
    SubcubeSplit sp = split(3, d);
    const int p = sp.part_of(T.s1);
    if (sp.part_of(T.s2) != p || sp.part_of(T.t1) != p || sp.part_of(T.t2) != p)
        return false;
    FaultSet fp = sp.faults_in_part(F, p);
    if (fp.size() != 2) return false;
    Terminals ct;
    ct.s1 = sp.down(T.s1);
    ct.s2 = sp.down(T.s2);
    ct.t1 = sp.down(T.t1);
    ct.t2 = sp.down(T.t2);
    return exception_witness(fp, ct).has_value();
}

void gate(const Instance& inst, const char* what) {
    inst.check();
    if (inst.n < 2) throw InputError(std::string(what) + " needs order at least 2");
    if (inst.faults.size() > inst.fault_budget())
        throw FaultBudgetExceeded("instance carries " + std::to_string(inst.faults.size()) +
                                  " faults; tolerated budget at order " +
                                  std::to_string(inst.n) + " is " +
                                  std::to_string(inst.fault_budget()));
}

}  // namespace

std::string CasePlan::str() const {
    std::ostringstream os;
    os << "order " << n;
    if (k >= 0) {
        os << " split " << k << " base-part " << base_part;
        for (const std::string& r : renames) os << " rename-" << r;
    }
    os << " layout " << tag;
    for (const CrossPick& p : picks) os << "; " << p.role << " " << p.edge.str();
    if (anchor) os << "; anchor in part " << anchor->part;
    if (cover) os << "; cover in part " << cover->part;
    return os.str();
}

int choose_split_dimension(int n, const FaultSet& faults, const Terminals& terminals) {
    if (n < 3) throw InputError("split selection needs order at least 3");
    terminals.check(n);
    for (const Edge& e : faults.edges)
        if (e.u.order() != n)
            throw InputError("fault edge " + e.str() + " has wrong order");
    const std::vector<int> per = faults.per_dimension(n);
    int best = 0;
    for (int d = 1; d < n; ++d)
        if (per[d] > per[best]) best = d;
    if (n > 3 || per[best] >= 2) return best;
    for (int d = 0; d < 3; ++d)
        if (!risky_split(faults, terminals, d)) return d;
    throw InternalError("every split dimension is blocked at order 3");
}

Edge pick_cross_edge(const SubcubeSplit& sp, int i, const FaultSet& faults,
                     const std::vector<Vertex>& forbid_endpoints,
                     const std::vector<Edge>& forbid_edges) {
    if (i < 0 || i >= 4) throw InputError("cross-edge list index must be in 0..3");
    auto e = scan_cross(sp, i, faults, forbid_endpoints, forbid_edges, 0);
    if (!e)
        throw InternalError("no usable edge between parts " + std::to_string(i) + " and " +
                            std::to_string((i + 1) & 3));
    return *e;
}

Dpc2 solve(const Instance& inst) {
    gate(inst, "solve");
    return solve_impl(inst.n, inst.faults, inst.terminals, nullptr);
}

CasePlan explain(const Instance& inst) {
    gate(inst, "explain");
    CasePlan plan;
    solve_impl(inst.n, inst.faults, inst.terminals, &plan);
    return plan;
}

}  // namespace bhdpc
