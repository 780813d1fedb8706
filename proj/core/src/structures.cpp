#include "bhdpc/structures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <set>

#include "bhdpc/basecase.hpp"
#include "bhdpc/errors.hpp"
#include "bhdpc/hampath.hpp"

namespace bhdpc {
namespace {

// Structure instances are tiny (a part has 4^(n-1) vertices and few faults),
// so the internal searches run without an expansion cap. Legitimate dead ends
// surface as NotFound and the enumeration moves on.
constexpr long long kNoLimit = std::numeric_limits<long long>::max() / 4;

using Lift = std::function<Vertex(const Vertex&)>;

// Conditions of the top-level instance. Candidates found deep in the column
// descent are lifted back to the top coordinates before testing, so the
// cross-edge slack always refers to the real fault set and split dimension,
// no matter how far down the recursion went.
struct TopConds {
    int n = 0;
    const FaultSet* faults = nullptr;
    int k = 0;
    const Vertex* t1 = nullptr;  // cover finder only
    const Vertex* t2 = nullptr;
    int* skip = nullptr;  // countdown over admissible structures, shared by all levels
};

// One admissible structure is about to be delivered; eat it if the caller
// asked to pass over some. The countdown is shared down the recursion, so
// the skip walks one global enumeration.
bool pass_over(const TopConds& tc) {
    if (tc.skip && *tc.skip > 0) {
        --*tc.skip;
        return true;
    }
    return false;
}

bool spread_ok(const TopConds& tc, const Vertex& v) {
    for (int j = 0; j < tc.n; j++)
        if (tc.faults->count_at(v, j) >= 2) return false;
    return true;
}

// Some common k-dimension neighbor of the twin pair {a, twin(a)} keeps both
// of its k-dimension edges fault-free. Those two edges lead exactly back to
// the pair, so this is the pair's guaranteed exit across the split.
bool pair_exit(int n, const FaultSet& f, int k, const Vertex& a) {
    for (const Vertex& x : neighbors(a, n))
        if (edge_dimension(a, x) == k && f.count_at(x, k) == 0) return true;
    return false;
}

bool in_sorted(const std::vector<Vertex>& vs, const Vertex& v) {
    return std::binary_search(vs.begin(), vs.end(), v);
}

std::vector<Vertex> dim_partners(const Vertex& v, int m, int dim) {
    std::vector<Vertex> out;
    for (const Vertex& x : neighbors(v, m))
        if (edge_dimension(v, x) == dim) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

// The dimension to decompose the part along: most faulted inside the part,
// ties to the smallest index.
int pick_inner_dimension(int m, const FaultSet& f, int k, const SubcubeSplit& sp, int part) {
    std::vector<int> count(m, 0);
    for (const Edge& e : f.edges)
        if (sp.part_of(e.u) == part && sp.part_of(e.v) == part) count[e.dimension()]++;
    int best = k == 0 ? 1 : 0;
    for (int j = 0; j < m; j++)
        if (j != k && count[j] > count[best]) best = j;
    return best;
}

// Index of dimension k inside the one-order-down coordinates of a column of
// s2. Coordinate splits shift indices past the dropped one; a dimension-0
// split renames classes through its normalizer, so probe with a sample edge.
int child_dimension(const SubcubeSplit& s2, int k) {
    if (s2.k >= 1) return k > s2.k ? k - 1 : k;
    Vertex v{std::vector<Coord>(s2.n, 0)};
    Vertex w = v;
    w.c[0] = 1;
    w.c[k] = 1;
    return edge_dimension(s2.normalizer->apply(v), s2.normalizer->apply(w));
}

struct ChainPort {
    Vertex v;
    bool inside = false;  // v itself is the chain's end vertex in its block
};

// A Hamiltonian chain through the given blocks in order, joined by
// fault-free k2-dimension edges. An outside port hooks in through such an
// edge as well; an inside port is the chain's own end vertex. Returns the
// stitched vertex sequence, exactly the blocks' vertices.
std::optional<std::vector<Vertex>> ham_chain(int m, const FaultSet& f, int k2,
                                             const std::vector<const std::vector<Vertex>*>& blocks,
                                             const ChainPort& from, const ChainPort& to) {
    auto partners_in = [&](const Vertex& v, const std::vector<Vertex>& blk) {
        std::vector<Vertex> out;
        for (const Vertex& x : dim_partners(v, m, k2))
            if (!f.contains(v, x) && in_sorted(blk, x)) out.push_back(x);
        return out;
    };
    std::function<std::optional<std::vector<Vertex>>(size_t, const Vertex&)> step =
        [&](size_t idx, const Vertex& entry) -> std::optional<std::vector<Vertex>> {
        const std::vector<Vertex>& blk = *blocks[idx];
        HamQuery q;
        q.n = m;
        q.faults = f;
        q.x = entry;
        q.allowed = blk;
        q.budget = kNoLimit;
        if (idx + 1 == blocks.size()) {
            std::vector<Vertex> exits =
                to.inside ? std::vector<Vertex>{to.v} : partners_in(to.v, blk);
            for (const Vertex& exit : exits) {
                if (exit == entry) continue;
                q.y = exit;
                HamResult r = ham_path(q);
                if (r.found()) return r.path.vertices;
            }
            return std::nullopt;
        }
        for (const Vertex& x : blk) {
            if (x == entry) continue;
            std::vector<Vertex> nexts = partners_in(x, *blocks[idx + 1]);
            if (nexts.empty()) continue;
            q.y = x;
            HamResult r = ham_path(q);
            if (!r.found()) continue;
            for (const Vertex& y : nexts)
                if (auto rest = step(idx + 1, y)) {
                    std::vector<Vertex> out = r.path.vertices;
                    out.insert(out.end(), rest->begin(), rest->end());
                    return out;
                }
        }
        return std::nullopt;
    };
    std::vector<Vertex> entries =
        from.inside ? std::vector<Vertex>{from.v} : partners_in(from.v, *blocks.front());
    for (const Vertex& entry : entries)
        if (auto r = step(0, entry)) return r;
    return std::nullopt;
}

std::vector<Vertex> concat(std::initializer_list<const std::vector<Vertex>*> pieces) {
    std::vector<Vertex> out;
    for (const std::vector<Vertex>* p : pieces) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// ---------------------------------------------------------------- anchors

std::optional<CycleAnchor> anchor_worker(int m, const FaultSet& f, int k, int part,
                                         const Lift& lift, const TopConds& tc);

std::optional<CycleAnchor> anchor_base(const FaultSet& f, int k, int part, const SubcubeSplit& sp,
                                       const Lift& lift, const TopConds& tc) {
    const std::vector<Vertex>& zone = sp.parts[part];
    auto zone_nbrs = [&](const Vertex& v) {
        std::vector<Vertex> out;
        for (const Vertex& x : neighbors(v, 3))
            if (in_sorted(zone, x)) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const Vertex& a : zone) {
        if (a.side() != 0) continue;
        Vertex c = twin(a);
        if (!pair_exit(tc.n, *tc.faults, tc.k, lift(a))) continue;
        for (const Vertex& b : zone_nbrs(a)) {
            Vertex d = twin(b);
            Vertex B = lift(b), D = lift(d), C = lift(c);
            if (tc.faults->count_at(B, tc.k) != 0) continue;
            if (tc.faults->count_at(D, tc.k) >= 2) continue;
            if (tc.faults->contains(C, D)) continue;
            for (const Vertex& u : zone_nbrs(b)) {
                if (u == a || u == c) continue;
                if (!spread_ok(tc, lift(u))) continue;
                HamQuery q;
                q.n = 3;
                q.faults = f;
                q.x = u;
                q.y = a;
                q.excluded = {b, c, d};
                q.allowed = zone;
                q.budget = kNoLimit;
                HamResult r = longest_path_excluding(q);
                if (!r.found()) continue;
                if (pass_over(tc)) continue;
                return CycleAnchor{k, part, a, c, b, d, u, r.path};
            }
        }
    }
    return std::nullopt;
}

std::optional<CycleAnchor> anchor_rec(int m, const FaultSet& f, int k, int part,
                                      const SubcubeSplit& sp, const Lift& lift,
                                      const TopConds& tc) {
    int k2 = pick_inner_dimension(m, f, k, sp, part);
    auto s2 = std::make_shared<SubcubeSplit>(split(m, k2));
    std::array<std::vector<Vertex>, 4> blocks;
    for (const Vertex& v : sp.parts[part]) blocks[s2->part_of(v)].push_back(v);

    int kchild = child_dimension(*s2, k);
    for (int col = 0; col < 4; col++) {
        FaultSet fchild = s2->faults_in_part(f, col);
        int pchild = split(m - 1, kchild).part_of(s2->down(blocks[col].front()));
        Lift clift = [lift, s2, col](const Vertex& v) { return lift(s2->up(col, v)); };
        auto inner = anchor_worker(m - 1, fchild, kchild, pchild, clift, tc);
        if (!inner) continue;

        auto up = [&](const Vertex& v) { return s2->up(col, v); };
        Path p0{s2->up(col, inner->p.vertices)};
        // Open the path at an edge whose ends both keep a fault-free
        // k2-dimension exit, and loop the other three blocks in through it.
        for (int i = 0; i + 1 < static_cast<int>(p0.vertices.size()); i++) {
            const Vertex& z1 = p0.vertices[i];
            const Vertex& z2 = p0.vertices[i + 1];
            if (f.count_at(z1, k2) >= 2 || f.count_at(z2, k2) >= 2) continue;
            int dir = z1.side() == 0 ? 1 : 3;
            std::vector<const std::vector<Vertex>*> run = {&blocks[(col + dir) % 4],
                                                           &blocks[(col + 2) % 4],
                                                           &blocks[(col + 4 - dir) % 4]};
            auto chain = ham_chain(m, f, k2, run, {z1, false}, {z2, false});
            if (!chain) continue;
            if (pass_over(tc)) continue;
            std::vector<Vertex> head(p0.vertices.begin(), p0.vertices.begin() + i + 1);
            std::vector<Vertex> tail(p0.vertices.begin() + i + 1, p0.vertices.end());
            return CycleAnchor{k,       part,          up(inner->a), up(inner->c),
                               up(inner->b), up(inner->d), up(inner->u),
                               Path{concat({&head, &*chain, &tail})}};
        }
    }
    return std::nullopt;
}

std::optional<CycleAnchor> anchor_worker(int m, const FaultSet& f, int k, int part,
                                         const Lift& lift, const TopConds& tc) {
    SubcubeSplit sp = split(m, k);
    if (m == 3) return anchor_base(f, k, part, sp, lift, tc);
    return anchor_rec(m, f, k, part, sp, lift, tc);
}

// ----------------------------------------------------------------- covers

// What the cover worker must deliver at its level. A prescribed start pins
// p's first vertex (the enclosing level bridges into it); a free far end
// lets the worker pick p's last vertex, subject to the top-level slack
// condition. At most one of the two relaxations is active at a time.
struct CoverGoal {
    Vertex t1;
    std::optional<Vertex> u_fixed;
    std::optional<Vertex> t2;
};

std::optional<BridgedPartCover> cover_worker(int m, const FaultSet& f, int k, int part,
                                             const CoverGoal& goal, const Lift& lift,
                                             const TopConds& tc);

std::optional<BridgedPartCover> cover_base(const FaultSet& f, int k, int part,
                                           const SubcubeSplit& sp, const CoverGoal& goal,
                                           const Lift& lift, const TopConds& tc) {
    FaultSet f2 = sp.faults_in_part(f, part);
    Vertex t1b = sp.down(goal.t1);
    auto lift2 = [&](const Vertex& v) { return lift(sp.up(part, v)); };
    std::optional<Vertex> want_u;
    if (goal.u_fixed) want_u = sp.down(*goal.u_fixed);
    auto accept = [&](const BridgedCover& s) {
        if (want_u && s.u != *want_u) return false;
        if (!want_u && !spread_ok(tc, lift2(s.u))) return false;
        Vertex A = lift2(s.a), B = lift2(s.b);
        if (tc.faults->count_at(B, tc.k) >= 2) return false;
        if (!pair_exit(tc.n, *tc.faults, tc.k, A)) return false;
        if (tc.t1 && B == *tc.t1) return false;
        if (tc.t2 && B == *tc.t2) return false;
        return !pass_over(tc);
    };
    std::vector<Vertex> ends;
    if (goal.t2) {
        ends.push_back(sp.down(*goal.t2));
    } else {
        const BhGraph& g2 = BhGraph::get(2);
        for (VertexId id = 0; id < g2.nv(); id++) {
            Vertex w = g2.vertex(id);
            if (w.side() != t1b.side() || w == t1b) continue;
            if (!spread_ok(tc, lift2(w))) continue;
            ends.push_back(w);
        }
    }
    for (const Vertex& w : ends) {
        auto r = bridged_cover_search(f2, t1b, w, accept);
        if (!r) continue;
        BridgedPartCover out;
        out.k = k;
        out.part = part;
        out.u = sp.up(part, r->u);
        out.a = sp.up(part, r->a);
        out.c = sp.up(part, r->c);
        out.b = sp.up(part, r->b);
        out.p = Path{sp.up(part, r->p.vertices)};
        out.q = Path{sp.up(part, r->q.vertices)};
        return out;
    }
    return std::nullopt;
}

std::optional<BridgedPartCover> cover_rec(int m, const FaultSet& f, int k, int part,
                                          const SubcubeSplit& sp, const CoverGoal& goal,
                                          const Lift& lift, const TopConds& tc) {
    int k2 = pick_inner_dimension(m, f, k, sp, part);
    auto s2 = std::make_shared<SubcubeSplit>(split(m, k2));
    std::array<std::vector<Vertex>, 4> blocks;
    for (const Vertex& v : sp.parts[part]) blocks[s2->part_of(v)].push_back(v);
    int beta = s2->part_of(goal.t1);
    int r = goal.t2 ? (s2->part_of(*goal.t2) - beta + 4) % 4 : 0;

    // Descent plumbing for the block holding t1, where the bridged pair goes.
    FaultSet fchild = s2->faults_in_part(f, beta);
    int kchild = child_dimension(*s2, k);
    int pchild = split(m - 1, kchild).part_of(s2->down(blocks[beta].front()));
    Lift clift = [lift, s2, beta](const Vertex& v) { return lift(s2->up(beta, v)); };
    auto call_inner = [&](const CoverGoal& g) {
        return cover_worker(m - 1, fchild, kchild, pchild, g, clift, tc);
    };
    auto up = [&](const Vertex& v) { return s2->up(beta, v); };
    auto up_path = [&](const Path& p) { return Path{s2->up(beta, p.vertices)}; };

    const std::vector<Vertex>& blk1 = blocks[(beta + 1) % 4];
    const std::vector<Vertex>& blk2 = blocks[(beta + 2) % 4];
    const std::vector<Vertex>& blk3 = blocks[(beta + 3) % 4];

    if (r == 0) {
        // t2 shares t1's block (or is ours to choose there). Solve one order
        // down, then loop the other three blocks in through an opened edge.
        if (goal.u_fixed && s2->part_of(*goal.u_fixed) != beta) return std::nullopt;
        CoverGoal g;
        g.t1 = s2->down(goal.t1);
        if (goal.u_fixed) g.u_fixed = s2->down(*goal.u_fixed);
        if (goal.t2) g.t2 = s2->down(*goal.t2);
        auto inner = call_inner(g);
        if (!inner) return std::nullopt;
        Path p0 = up_path(inner->p), q0 = up_path(inner->q);
        for (int which = 0; which < 2; which++) {
            const Path& host = which == 0 ? p0 : q0;
            int first = which == 0 ? 0 : 2;  // keep <c, b, a> intact on q
            for (int i = first; i + 1 < static_cast<int>(host.vertices.size()); i++) {
                const Vertex& z1 = host.vertices[i];
                const Vertex& z2 = host.vertices[i + 1];
                if (f.count_at(z1, k2) >= 2 || f.count_at(z2, k2) >= 2) continue;
                int dir = z1.side() == 0 ? 1 : 3;
                std::vector<const std::vector<Vertex>*> run = {&blocks[(beta + dir) % 4],
                                                               &blocks[(beta + 2) % 4],
                                                               &blocks[(beta + 4 - dir) % 4]};
                auto chain = ham_chain(m, f, k2, run, {z1, false}, {z2, false});
                if (!chain) continue;
                if (pass_over(tc)) continue;
                std::vector<Vertex> head(host.vertices.begin(), host.vertices.begin() + i + 1);
                std::vector<Vertex> tail(host.vertices.begin() + i + 1, host.vertices.end());
                Path woven{concat({&head, &*chain, &tail})};
                BridgedPartCover s;
                s.k = k;
                s.part = part;
                s.u = up(inner->u);
                s.a = up(inner->a);
                s.c = up(inner->c);
                s.b = up(inner->b);
                s.p = which == 0 ? woven : p0;
                s.q = which == 0 ? q0 : woven;
                return s;
            }
        }
        return std::nullopt;
    }

    if (r == 1) {
        // t2 one block above t1. Walk that block from a fresh u, open an
        // edge, bridge down into t1's block with a prescribed start, and
        // come back through the two far blocks.
        for (const Vertex& u : blk1) {
            if (u.side() != 0 || !spread_ok(tc, lift(u))) continue;
            HamQuery hq;
            hq.n = m;
            hq.faults = f;
            hq.x = u;
            hq.y = *goal.t2;
            hq.allowed = blk1;
            hq.budget = kNoLimit;
            HamResult hr = ham_path(hq);
            if (!hr.found()) continue;
            const Path& p1 = hr.path;
            for (int i = 0; i + 1 < static_cast<int>(p1.vertices.size()); i++) {
                const Vertex& x = p1.vertices[i];
                const Vertex& y = p1.vertices[i + 1];
                if (f.count_at(x, k2) >= 2 || f.count_at(y, k2) >= 2) continue;
                const Vertex& a1 = x.side() == 1 ? x : y;
                std::vector<Vertex> starts;
                for (const Vertex& w : dim_partners(a1, m, k2))
                    if (!f.contains(a1, w) && in_sorted(blocks[beta], w)) starts.push_back(w);
                for (const Vertex& uprime : starts) {
                    CoverGoal g;
                    g.t1 = s2->down(goal.t1);
                    g.u_fixed = s2->down(uprime);
                    auto inner = call_inner(g);
                    if (!inner) continue;
                    Path p0 = up_path(inner->p);  // uprime -> free far end
                    Vertex a0 = p0.back();
                    std::vector<Vertex> head(p1.vertices.begin(), p1.vertices.begin() + i + 1);
                    std::vector<Vertex> tail(p1.vertices.begin() + i + 1, p1.vertices.end());
                    std::vector<Vertex> vs;
                    if (x.side() == 0) {
                        // head ends side 0: ascend through the far blocks
                        // first, return through the bridged block backwards.
                        auto mid = ham_chain(m, f, k2, {&blk2, &blk3}, {x, false}, {a0, false});
                        if (!mid) continue;
                        Path p0r = p0.reversed();
                        vs = concat({&head, &*mid, &p0r.vertices, &tail});
                    } else {
                        auto mid = ham_chain(m, f, k2, {&blk3, &blk2}, {a0, false}, {y, false});
                        if (!mid) continue;
                        vs = concat({&head, &p0.vertices, &*mid, &tail});
                    }
                    BridgedPartCover s;
                    s.k = k;
                    s.part = part;
                    s.u = u;
                    s.a = up(inner->a);
                    s.c = up(inner->c);
                    s.b = up(inner->b);
                    s.p = Path{vs};
                    s.q = up_path(inner->q);
                    return s;
                }
            }
        }
        return std::nullopt;
    }

    if (r == 2) {
        // t2 two blocks away. Walk its block from a fresh u, open an edge,
        // and chain through the two side blocks with the bridged block's
        // cover between them.
        for (const Vertex& u : blk2) {
            if (u.side() != 0 || !spread_ok(tc, lift(u))) continue;
            HamQuery hq;
            hq.n = m;
            hq.faults = f;
            hq.x = u;
            hq.y = *goal.t2;
            hq.allowed = blk2;
            hq.budget = kNoLimit;
            HamResult hr = ham_path(hq);
            if (!hr.found()) continue;
            const Path& p2 = hr.path;
            for (int i = 0; i + 1 < static_cast<int>(p2.vertices.size()); i++) {
                const Vertex& x = p2.vertices[i];
                const Vertex& y = p2.vertices[i + 1];
                if (f.count_at(x, k2) >= 2 || f.count_at(y, k2) >= 2) continue;
                for (const Vertex& a0 : blocks[beta]) {
                    if (a0.side() != goal.t1.side() || a0 == goal.t1) continue;
                    if (f.count_at(a0, k2) >= 2) continue;
                    CoverGoal g;
                    g.t1 = s2->down(goal.t1);
                    g.t2 = s2->down(a0);
                    auto inner = call_inner(g);
                    if (!inner) continue;
                    Path p0 = up_path(inner->p);  // u0 -> a0
                    Vertex u0 = p0.front();
                    std::vector<Vertex> head(p2.vertices.begin(), p2.vertices.begin() + i + 1);
                    std::vector<Vertex> tail(p2.vertices.begin() + i + 1, p2.vertices.end());
                    std::vector<Vertex> vs;
                    if (x.side() == 1) {
                        // head ends side 1: descend into the bridged block.
                        auto c1 = ham_chain(m, f, k2, {&blk1}, {x, false}, {u0, false});
                        if (!c1) continue;
                        auto c3 = ham_chain(m, f, k2, {&blk3}, {a0, false}, {y, false});
                        if (!c3) continue;
                        vs = concat({&head, &*c1, &p0.vertices, &*c3, &tail});
                    } else {
                        auto c3 = ham_chain(m, f, k2, {&blk3}, {x, false}, {a0, false});
                        if (!c3) continue;
                        auto c1 = ham_chain(m, f, k2, {&blk1}, {u0, false}, {y, false});
                        if (!c1) continue;
                        Path p0r = p0.reversed();
                        vs = concat({&head, &*c3, &p0r.vertices, &*c1, &tail});
                    }
                    BridgedPartCover s;
                    s.k = k;
                    s.part = part;
                    s.u = u;
                    s.a = up(inner->a);
                    s.c = up(inner->c);
                    s.b = up(inner->b);
                    s.p = Path{vs};
                    s.q = up_path(inner->q);
                    return s;
                }
            }
        }
        return std::nullopt;
    }

    // r == 3: t2 one block below t1. A fresh u two blocks up walks its own
    // block and the one between, crosses the bridged block's cover, and
    // finishes through t2's block.
    for (const Vertex& a0 : blocks[beta]) {
        if (a0.side() != goal.t1.side() || a0 == goal.t1) continue;
        if (f.count_at(a0, k2) >= 2) continue;
        CoverGoal g;
        g.t1 = s2->down(goal.t1);
        g.t2 = s2->down(a0);
        auto inner = call_inner(g);
        if (!inner) continue;
        Path p0 = up_path(inner->p);  // u0 -> a0
        Vertex u0 = p0.front();
        auto cB = ham_chain(m, f, k2, {&blk3}, {a0, false}, {*goal.t2, true});
        if (!cB) continue;
        for (const Vertex& u : blk2) {
            if (u.side() != 0 || !spread_ok(tc, lift(u))) continue;
            auto cA = ham_chain(m, f, k2, {&blk2, &blk1}, {u, true}, {u0, false});
            if (!cA) continue;
            BridgedPartCover s;
            s.k = k;
            s.part = part;
            s.u = u;
            s.a = up(inner->a);
            s.c = up(inner->c);
            s.b = up(inner->b);
            s.p = Path{concat({&*cA, &p0.vertices, &*cB})};
            s.q = up_path(inner->q);
            return s;
        }
    }
    return std::nullopt;
}

std::optional<BridgedPartCover> cover_worker(int m, const FaultSet& f, int k, int part,
                                             const CoverGoal& goal, const Lift& lift,
                                             const TopConds& tc) {
    SubcubeSplit sp = split(m, k);
    if (m == 3) return cover_base(f, k, part, sp, goal, lift, tc);
    return cover_rec(m, f, k, part, sp, goal, lift, tc);
}

// ------------------------------------------------------------- validation

void check_finder_args(int n, const FaultSet& faults, int k, int part) {
    if (n < 3 || n > 6) throw InputError("order must be between 3 and 6");
    if (k < 0 || k >= n) throw InputError("split dimension out of range");
    if (part < 0 || part > 3) throw InputError("part index out of range");
    for (const Edge& e : faults.edges)
        if (e.u.order() != n) throw InputError("fault edge " + e.str() + " has the wrong order");
    if (static_cast<int>(faults.edges.size()) > 2 * n - 3)
        throw InputError("fault set exceeds the 2n-3 budget");
}

FaultSet flip_faults(const FaultSet& f) {
    FaultSet out;
    for (const Edge& e : f.edges) out.insert(Edge(parity_flip(e.u), parity_flip(e.v)));
    return out;
}

}  // namespace

CycleAnchor find_cycle_anchor(int n, const FaultSet& faults, int k, int part) {
    check_finder_args(n, faults, k, part);
    TopConds tc{n, &faults, k, nullptr, nullptr};
    auto r = anchor_worker(n, faults, k, part, [](const Vertex& v) { return v; }, tc);
    if (!r)
        throw InternalError("cycle anchor search exhausted in part " + std::to_string(part) +
                            " of dimension " + std::to_string(k));
    std::vector<std::string> bad = check_structure(*r, n, faults);
    if (!bad.empty()) throw InternalError("cycle anchor failed validation: " + bad.front());
    return *r;
}

BridgedPartCover find_bridged_cover(int n, const FaultSet& faults, int k, int part,
                                    const Vertex& t1, const Vertex& t2) {
    check_finder_args(n, faults, k, part);
    check_vertex(t1, n);
    check_vertex(t2, n);
    if (t1 == t2) throw InputError("path ends coincide");
    if (t1.side() != t2.side()) throw InputError("path ends on different partite sides");
    SubcubeSplit sp = split(n, k);
    if (sp.part_of(t1) != part || sp.part_of(t2) != part)
        throw InputError("path ends outside the requested part");

    // Side-0 ends are handled in the mirror image: conjugate through the
    // side-swapping automorphism, which keeps every dimension class, and
    // map the result back.
    bool mirrored = t1.side() == 0;
    FaultSet F = mirrored ? flip_faults(faults) : faults;
    Vertex T1 = mirrored ? parity_flip(t1) : t1;
    Vertex T2 = mirrored ? parity_flip(t2) : t2;
    int P = mirrored ? sp.part_of(T1) : part;

    TopConds tc{n, &F, k, &T1, &T2};
    CoverGoal goal{T1, std::nullopt, T2};
    auto r = cover_worker(n, F, k, P, goal, [](const Vertex& v) { return v; }, tc);
    if (!r)
        throw InternalError("bridged cover search exhausted in part " + std::to_string(part) +
                            " of dimension " + std::to_string(k));
    BridgedPartCover out = *r;
    if (mirrored) {
        out.part = part;
        out.u = parity_flip(out.u);
        out.a = parity_flip(out.a);
        out.c = parity_flip(out.c);
        out.b = parity_flip(out.b);
        for (Vertex& v : out.p.vertices) v = parity_flip(v);
        for (Vertex& v : out.q.vertices) v = parity_flip(v);
    }
    std::vector<std::string> bad = check_structure(out, n, faults, t1, t2);
    if (!bad.empty()) throw InternalError("bridged cover failed validation: " + bad.front());
    return out;
}

std::vector<std::string> check_structure(const CycleAnchor& s, int n, const FaultSet& faults) {
    std::vector<std::string> out;
    if (n < 3 || n > 6) {
        out.push_back("order must be between 3 and 6");
        return out;
    }
    if (s.k < 0 || s.k >= n || s.part < 0 || s.part > 3) {
        out.push_back("split context out of range");
        return out;
    }
    const std::array<std::pair<const Vertex*, const char*>, 5> named = {
        {{&s.a, "a"}, {&s.c, "c"}, {&s.b, "b"}, {&s.d, "d"}, {&s.u, "u"}}};
    for (auto [v, name] : named)
        if (v->order() != n) {
            out.push_back(std::string(name) + " has the wrong order");
            return out;
        }
    SubcubeSplit sp = split(n, s.k);
    for (auto [v, name] : named)
        if (sp.part_of(*v) != s.part) out.push_back(std::string(name) + " outside the part");
    if (s.a.side() != 0 || s.c.side() != 0) out.push_back("twin pair a, c not on side 0");
    if (s.b.side() != 1 || s.d.side() != 1) out.push_back("twin pair b, d not on side 1");
    if (s.u.side() != 0) out.push_back("u not on side 0");
    if (twin(s.a) != s.c) out.push_back("c is not the twin of a");
    if (twin(s.b) != s.d) out.push_back("d is not the twin of b");
    if (!adjacent(s.a, s.b) || !adjacent(s.b, s.c) || !adjacent(s.c, s.d) ||
        !adjacent(s.d, s.a)) {
        out.push_back("<a, b, c, d> is not a 4-cycle");
        return out;
    }
    if (!pair_exit(n, faults, s.k, s.a))
        out.push_back("no fault-free split-dimension exit above the twin pair");
    if (faults.count_at(s.b, s.k) != 0)
        out.push_back("b loses a split-dimension edge to a fault");
    if (faults.count_at(s.d, s.k) >= 2)
        out.push_back("d loses both split-dimension edges to faults");
    if (faults.contains(s.c, s.d)) out.push_back("edge cd is faulty");
    if (!adjacent(s.u, s.b) || !adjacent(s.u, s.d))
        out.push_back("u is not a common neighbor of b and d");
    for (int j = 0; j < n; j++)
        if (faults.count_at(s.u, j) >= 2) {
            out.push_back("u has two faulty edges in dimension " + std::to_string(j));
            break;
        }
    if (s.p.empty()) {
        out.push_back("empty path");
        return out;
    }
    if (s.p.front() != s.u) out.push_back("path does not start at u");
    if (s.p.back() != s.a) out.push_back("path does not end at a");
    for (const std::string& v : s.p.violations(n, &faults)) out.push_back("path: " + v);
    std::set<Vertex> covered(s.p.vertices.begin(), s.p.vertices.end());
    for (const Vertex& v : {s.b, s.c, s.d})
        if (covered.count(v)) out.push_back("coverage: path touches " + v.str());
    int missing = 0;
    for (const Vertex& v : sp.parts[s.part])
        if (v != s.b && v != s.c && v != s.d && !covered.count(v)) missing++;
    if (missing > 0)
        out.push_back("coverage: path misses " + std::to_string(missing) +
                      " vertices of the part");
    if (missing == 0 && s.p.vertices.size() != sp.parts[s.part].size() - 3)
        out.push_back("coverage: path leaves the part");
    return out;
}

std::vector<std::string> check_structure(const BridgedPartCover& s, int n, const FaultSet& faults,
                                         const Vertex& t1, const Vertex& t2) {
    std::vector<std::string> out;
    if (n < 3 || n > 6) {
        out.push_back("order must be between 3 and 6");
        return out;
    }
    if (s.k < 0 || s.k >= n || s.part < 0 || s.part > 3) {
        out.push_back("split context out of range");
        return out;
    }
    const std::array<std::pair<const Vertex*, const char*>, 6> named = {
        {{&s.u, "u"}, {&s.a, "a"}, {&s.c, "c"}, {&s.b, "b"}, {&t1, "t1"}, {&t2, "t2"}}};
    for (auto [v, name] : named)
        if (v->order() != n) {
            out.push_back(std::string(name) + " has the wrong order");
            return out;
        }
    SubcubeSplit sp = split(n, s.k);
    for (auto [v, name] : named)
        if (sp.part_of(*v) != s.part) out.push_back(std::string(name) + " outside the part");
    if (t1 == t2) out.push_back("path ends coincide");
    if (t1.side() != t2.side()) out.push_back("path ends on different partite sides");
    int ts = t1.side();
    if (s.u.side() == ts || s.a.side() == ts || s.c.side() == ts)
        out.push_back("u, a, c must sit opposite the path ends");
    if (s.b.side() != ts) out.push_back("b must share the path ends' side");
    if (twin(s.a) != s.c) out.push_back("c is not the twin of a");
    if (!adjacent(s.b, s.a) || !adjacent(s.b, s.c))
        out.push_back("b is not a common neighbor of a and c");
    if (s.b == t1 || s.b == t2) out.push_back("b collides with a terminal");
    if (s.u == s.a || s.u == s.c) out.push_back("u collides with the twin pair");
    if (!pair_exit(n, faults, s.k, s.a))
        out.push_back("no fault-free split-dimension exit above the twin pair");
    if (faults.count_at(s.b, s.k) >= 2)
        out.push_back("b loses both split-dimension edges to faults");
    for (int j = 0; j < n; j++)
        if (faults.count_at(s.u, j) >= 2) {
            out.push_back("u has two faulty edges in dimension " + std::to_string(j));
            break;
        }
    if (s.p.empty() || s.q.empty()) {
        out.push_back("empty path");
        return out;
    }
    if (s.p.front() != s.u) out.push_back("p does not start at u");
    if (s.p.back() != t2) out.push_back("p does not end at t2");
    if (s.q.front() != s.c) out.push_back("q does not start at c");
    if (s.q.back() != t1) out.push_back("q does not end at t1");
    if (s.q.vertices.size() < 3 || s.q.vertices[1] != s.b || s.q.vertices[2] != s.a)
        out.push_back("q does not open with <c, b, a>");
    for (const std::string& v : s.p.violations(n, &faults)) out.push_back("p: " + v);
    for (const std::string& v : s.q.violations(n, &faults)) out.push_back("q: " + v);
    std::set<Vertex> covered(s.p.vertices.begin(), s.p.vertices.end());
    size_t total = s.p.vertices.size();
    bool overlap = false;
    for (const Vertex& v : s.q.vertices) {
        if (!covered.insert(v).second) overlap = true;
        total++;
    }
    if (overlap) out.push_back("p and q share vertices");
    int missing = 0;
    for (const Vertex& v : sp.parts[s.part])
        if (!covered.count(v)) missing++;
    if (missing > 0)
        out.push_back("coverage: paths miss " + std::to_string(missing) + " vertices of the part");
    if (total != sp.parts[s.part].size() && !overlap)
        out.push_back("coverage: paths leave the part");
    return out;
}

}  // namespace bhdpc
