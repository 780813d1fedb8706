#include "bhdpc/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <sstream>

namespace bhdpc {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

Vertex parity_flip(const Vertex& v) {
    Vertex w = v;
    w.c[0] = mod4(1 - v.c[0]);
    for (size_t i = 1; i < w.c.size(); i++) w.c[i] = mod4(-v.c[i]);
    return w;
}

std::string Vertex::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c.size(); i++) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

int num_vertices(int n) {
    if (n < 1 || n > 6) throw InputError("order out of range: " + std::to_string(n));
    return 1 << (2 * n);
}

VertexId vertex_id(const Vertex& v) {
    VertexId id = 0;
    for (Coord x : v.c) id = id * 4 + x;
    return id;
}

Vertex vertex_of(VertexId id, int n) {
    Vertex v;
    v.c.assign(n, 0);
    for (int i = n - 1; i >= 0; i--) {
        v.c[i] = id & 3;
        id >>= 2;
    }
    return v;
}

void check_vertex(const Vertex& v, int n) {
    if (v.order() != n)
        throw InputError("vertex " + v.str() + " has " + std::to_string(v.order()) +
                         " coordinates, expected " + std::to_string(n));
    for (Coord x : v.c)
        if (x < 0 || x > 3)
            throw InputError("vertex " + v.str() + " has coordinate outside {0,1,2,3}");
}

Vertex twin(const Vertex& v) {
    Vertex w = v;
    w.c[0] = mod4(w.c[0] + 2);
    return w;
}

std::vector<Vertex> neighbors(const Vertex& v, int n) {
    check_vertex(v, n);
    std::vector<Vertex> out;
    out.reserve(2 * n);
    int sign = (v.c[0] % 2 == 0) ? 1 : -1;
    for (int delta : {1, -1}) {
        Vertex w = v;
        w.c[0] = mod4(v.c[0] + delta);
        out.push_back(w);  // dimension 0
        for (int j = 1; j < n; j++) {
            Vertex x = w;
            x.c[j] = mod4(v.c[j] + sign);
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool adjacent(const Vertex& u, const Vertex& v) {
    if (u.order() != v.order()) return false;
    int d = mod4(v.c[0] - u.c[0]);
    if (d != 1 && d != 3) return false;
    int sign = (u.c[0] % 2 == 0) ? 1 : -1;
    int outer_diffs = 0;
    for (int j = 1; j < u.order(); j++) {
        if (u.c[j] == v.c[j]) continue;
        if (mod4(v.c[j] - u.c[j]) != mod4(sign)) return false;
        outer_diffs++;
    }
    return outer_diffs <= 1;
}

int edge_dimension(const Vertex& u, const Vertex& v) {
    if (u.order() == v.order()) {
        int d = mod4(v.c[0] - u.c[0]);
        if (d == 1 || d == 3) {
            int sign = (u.c[0] % 2 == 0) ? 1 : -1;
            int dim = 0, outer_diffs = 0;
            bool ok = true;
            for (int j = 1; j < u.order(); j++) {
                if (u.c[j] == v.c[j]) continue;
                if (mod4(v.c[j] - u.c[j]) != mod4(sign)) { ok = false; break; }
                dim = j;
                outer_diffs++;
            }
            if (ok && outer_diffs <= 1) return dim;
        }
    }
    throw NotAdjacent("vertices " + u.str() + " and " + v.str() + " are not adjacent");
}

std::vector<Vertex> common_neighbors(const Vertex& u, const Vertex& v, int n) {
    auto nu = neighbors(u, n), nv = neighbors(v, n);
    std::vector<Vertex> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
}

int distance(const Vertex& u, const Vertex& v, int n) {
    check_vertex(u, n);
    check_vertex(v, n);
    const BhGraph& g = BhGraph::get(n);
    VertexId src = vertex_id(u), dst = vertex_id(v);
    if (src == dst) return 0;
    std::vector<int> dist(g.nv(), -1);
    std::queue<VertexId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : g.adj(x)) {
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            if (y == dst) return dist[y];
            q.push(y);
        }
    }
    throw InternalError("disconnected graph in distance()");
}

Edge::Edge(const Vertex& a, const Vertex& b) {
    edge_dimension(a, b);  // validates adjacency
    if (a < b) {
        u = a;
        v = b;
    } else {
        u = b;
        v = a;
    }
}

const Vertex& Edge::other(const Vertex& x) const {
    if (x == u) return v;
    if (x == v) return u;
    throw InputError("vertex " + x.str() + " is not an endpoint of " + str());
}

std::string Edge::str() const { return u.str() + "-" + v.str(); }

FaultSet::FaultSet(const std::vector<Edge>& es) {
    for (const Edge& e : es) insert(e);
}

void FaultSet::insert(const Edge& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
}

bool FaultSet::contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool FaultSet::contains(const Vertex& a, const Vertex& b) const {
    for (const Edge& e : edges)
        if (e.touches(a) && e.touches(b)) return true;
    return false;
}

int FaultSet::count_in_dimension(int k) const {
    int c = 0;
    for (const Edge& e : edges)
        if (e.dimension() == k) c++;
    return c;
}

std::vector<int> FaultSet::per_dimension(int n) const {
    std::vector<int> tally(n, 0);
    for (const Edge& e : edges) tally[e.dimension()]++;
    return tally;
}

int FaultSet::count_at(const Vertex& v) const {
    int c = 0;
    for (const Edge& e : edges)
        if (e.touches(v)) c++;
    return c;
}

int FaultSet::count_at(const Vertex& v, int k) const {
    int c = 0;
    for (const Edge& e : edges)
        if (e.touches(v) && e.dimension() == k) c++;
    return c;
}

BhGraph::BhGraph(int n) : n_(n), nv_(num_vertices(n)) {
    adj_.resize(nv_);
    dim_.assign(static_cast<size_t>(nv_) * nv_, -1);
    twin_.resize(nv_);
    for (VertexId id = 0; id < nv_; id++) {
        Vertex v = vertex_of(id, n);
        twin_[id] = vertex_id(twin(v));
        for (const Vertex& w : neighbors(v, n)) {
            VertexId wid = vertex_id(w);
            adj_[id].push_back(wid);
            dim_[static_cast<size_t>(id) * nv_ + wid] =
                static_cast<int8_t>(edge_dimension(v, w));
        }
    }
}

const BhGraph& BhGraph::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BhGraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot.reset(new BhGraph(n));
    return *slot;
}

Vertex Automorphism::apply(const Vertex& v) const { return vertex_of(fwd[vertex_id(v)], n); }

Vertex Automorphism::apply_inverse(const Vertex& v) const {
    return vertex_of(inv[vertex_id(v)], n);
}

Edge Automorphism::apply(const Edge& e) const { return Edge(apply(e.u), apply(e.v)); }

FaultSet Automorphism::apply(const FaultSet& f) const {
    FaultSet out;
    for (const Edge& e : f.edges) out.insert(apply(e));
    return out;
}

std::vector<Vertex> Automorphism::apply(const std::vector<Vertex>& vs) const {
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (const Vertex& v : vs) out.push_back(apply(v));
    return out;
}

Automorphism Automorphism::inverse() const {
    Automorphism out;
    out.n = n;
    out.fwd = inv;
    out.inv = fwd;
    out.description = "composite";
    return out;
}

Automorphism Automorphism::compose(const Automorphism& f, const Automorphism& g) {
    if (f.n != g.n) throw InputError("composing automorphisms of different orders");
    Automorphism out;
    out.n = f.n;
    int nv = num_vertices(f.n);
    out.fwd.resize(nv);
    out.inv.resize(nv);
    for (VertexId v = 0; v < nv; v++) out.fwd[v] = f.fwd[g.fwd[v]];
    for (VertexId v = 0; v < nv; v++) out.inv[out.fwd[v]] = v;
    out.description = "composite";
    return out;
}

bool Automorphism::valid() const {
    int nv = num_vertices(n);
    if (static_cast<int>(fwd.size()) != nv || static_cast<int>(inv.size()) != nv) return false;
    const BhGraph& g = BhGraph::get(n);
    for (VertexId v = 0; v < nv; v++) {
        if (inv[fwd[v]] != v) return false;
        for (VertexId w : g.adj(v))
            if (!g.adjacent(fwd[v], fwd[w])) return false;
    }
    return true;
}

Automorphism identity_automorphism(int n) {
    Automorphism a;
    a.n = n;
    int nv = num_vertices(n);
    a.fwd.resize(nv);
    a.inv.resize(nv);
    for (VertexId v = 0; v < nv; v++) a.fwd[v] = a.inv[v] = v;
    a.description = "identity";
    return a;
}

namespace {

Automorphism from_pointwise(int n, const std::function<Vertex(const Vertex&)>& f,
                            const std::string& description) {
    Automorphism a;
    a.n = n;
    int nv = num_vertices(n);
    a.fwd.assign(nv, -1);
    a.inv.assign(nv, -1);
    for (VertexId v = 0; v < nv; v++) {
        VertexId w = vertex_id(f(vertex_of(v, n)));
        a.fwd[v] = w;
        a.inv[w] = v;
    }
    a.description = description;
    if (!a.valid()) throw InternalError("constructed map is not an automorphism: " + description);
    return a;
}

}  // namespace

Automorphism outer_translate(int n, int j, int c) {
    if (j < 1 || j >= n)
        throw InputError("outer_translate needs an outer dimension, got " + std::to_string(j));
    int cc = mod4(c);
    return from_pointwise(
        n,
        [j, cc](const Vertex& v) {
            Vertex w = v;
            w.c[j] = mod4(w.c[j] + cc);
            return w;
        },
        "outer-translate(" + std::to_string(j) + "," + std::to_string(cc) + ")");
}

Automorphism inner_translate_2(int n) {
    return from_pointwise(
        n, [](const Vertex& v) { return twin(v); }, "inner-translate-2");
}

namespace {

// Backtracking search for a permutation that preserves adjacency and maps
// the dimension-0 edge class onto the dimension-j class. Anchored at
// (0,...,0) -> (0,...,0) and its +1 inner neighbor -> the +1 inner j-dimension
// neighbor; twin images are forced eagerly. Candidates and the assignment
// order are lexicographic, so the result is deterministic.
struct ExchangeSearch {
    const BhGraph& g;
    int nv, j;
    std::vector<VertexId> order;          // BFS assignment order from vertex 0
    std::vector<VertexId> img, pre;       // partial permutation and inverse
    std::vector<VertexId> trail;

    ExchangeSearch(const BhGraph& graph, int jdim) : g(graph), nv(graph.nv()), j(jdim) {
        img.assign(nv, -1);
        pre.assign(nv, -1);
        std::vector<char> seen(nv, 0);
        std::queue<VertexId> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            order.push_back(v);
            for (VertexId w : g.adj(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }

    bool consistent(VertexId v, VertexId w) const {
        Vertex vv = g.vertex(v), ww = g.vertex(w);
        if ((vv.c[0] & 1) != (ww.c[0] & 1)) return false;  // keep the bipartition pointwise
        for (VertexId u : g.adj(v)) {
            if (img[u] < 0) continue;
            int dw = g.edge_dim(w, img[u]);
            if (dw < 0) return false;
            int dv = g.edge_dim(v, u);
            if ((dv == 0) != (dw == j)) return false;
        }
        return true;
    }

    bool assign(VertexId v, VertexId w) {
        if (img[v] >= 0) return img[v] == w;
        if (pre[w] >= 0) return false;
        if (!consistent(v, w)) return false;
        img[v] = w;
        pre[w] = v;
        trail.push_back(v);
        return assign(g.twin_id(v), g.twin_id(w));
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            VertexId v = trail.back();
            trail.pop_back();
            pre[img[v]] = -1;
            img[v] = -1;
        }
    }

    bool extend(size_t idx) {
        while (idx < order.size() && img[order[idx]] >= 0) idx++;
        if (idx >= order.size()) return true;
        VertexId v = order[idx];
        for (VertexId w = 0; w < nv; w++) {
            if (pre[w] >= 0) continue;
            size_t mark = trail.size();
            if (assign(v, w) && extend(idx + 1)) return true;
            undo_to(mark);
        }
        return false;
    }
};

}  // namespace

Automorphism dimension_exchange(int n, int j) {
    if (j < 0 || j >= n)
        throw InputError("dimension out of range: " + std::to_string(j));
    if (j == 0) return identity_automorphism(n);

    static std::mutex mu;
    static std::map<std::pair<int, int>, Automorphism> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, j});
    if (it != cache.end()) return it->second;

    const BhGraph& g = BhGraph::get(n);
    ExchangeSearch search(g, j);
    Vertex origin = vertex_of(0, n);
    Vertex inner_nbr = origin;
    inner_nbr.c[0] = 1;  // the +1 dimension-0 neighbor
    Vertex jdim_nbr = inner_nbr;
    jdim_nbr.c[j] = 1;  // the +1 inner, +1 outer-j neighbor
    if (!search.assign(0, 0) || !search.assign(vertex_id(inner_nbr), vertex_id(jdim_nbr)) ||
        !search.extend(0))
        throw InternalError("dimension_exchange search failed for n=" + std::to_string(n) +
                            " j=" + std::to_string(j));

    Automorphism a;
    a.n = n;
    a.fwd = search.img;
    a.inv = search.pre;
    a.description = "dimension-exchange(" + std::to_string(j) + ")";
    if (!a.valid()) throw InternalError("dimension_exchange produced an invalid map");
    // The map must permute whole dimension classes (with 0 <-> j) and, since
    // it fixes the origin, preserve partite sides. Downstream subcube
    // bookkeeping leans on both facts, so fail loudly if either breaks.
    std::vector<int> sigma(n, -1);
    for (VertexId v = 0; v < g.nv(); v++) {
        if (g.vertex(v).side() != g.vertex(a.fwd[v]).side())
            throw InternalError("dimension_exchange does not preserve partite sides");
        for (VertexId w : g.adj(v)) {
            int d = g.edge_dim(v, w);
            int di = g.edge_dim(a.fwd[v], a.fwd[w]);
            if (sigma[d] < 0)
                sigma[d] = di;
            else if (sigma[d] != di)
                throw InternalError("dimension_exchange split a dimension class");
        }
    }
    if (sigma[0] != j)
        throw InternalError("dimension_exchange class mapping check failed");
    cache[{n, j}] = a;
    return a;
}

int SubcubeSplit::part_of(const Vertex& v) const {
    if (k >= 1) return v.c[k];
    return normalizer->apply(v).c[n - 1];
}

Vertex SubcubeSplit::down(const Vertex& v) const {
    Vertex w = (k >= 1) ? v : normalizer->apply(v);
    int drop = (k >= 1) ? k : n - 1;
    Vertex out;
    out.c.reserve(n - 1);
    for (int i = 0; i < n; i++)
        if (i != drop) out.c.push_back(w.c[i]);
    return out;
}

Vertex SubcubeSplit::up(int part, const Vertex& child) const {
    if (child.order() != n - 1) throw InputError("up(): child has wrong order");
    int at = (k >= 1) ? k : n - 1;
    Vertex w;
    w.c.reserve(n);
    for (int i = 0, ci = 0; i < n; i++)
        w.c.push_back(i == at ? part : child.c[ci++]);
    return (k >= 1) ? w : normalizer->apply_inverse(w);
}

std::vector<Vertex> SubcubeSplit::up(int part, const std::vector<Vertex>& children) const {
    std::vector<Vertex> out;
    out.reserve(children.size());
    for (const Vertex& v : children) out.push_back(up(part, v));
    return out;
}

int SubcubeSplit::cross_index(const Edge& e) const {
    int pu = part_of(e.u), pv = part_of(e.v);
    if (pu == pv) return -1;
    // The endpoint with even inner index sits in part i of E_{i,i+1}.
    const Vertex& even_end = (e.u.side() == 0) ? e.u : e.v;
    return part_of(even_end);
}

const Vertex& SubcubeSplit::lower_endpoint(const Edge& e) const {
    int i = cross_index(e);
    if (i < 0) throw InputError("lower_endpoint(): not a cross edge");
    return part_of(e.u) == i ? e.u : e.v;
}

FaultSet SubcubeSplit::faults_in_part(const FaultSet& f, int part) const {
    FaultSet out;
    for (const Edge& e : f.edges) {
        if (part_of(e.u) != part || part_of(e.v) != part) continue;
        out.insert(Edge(down(e.u), down(e.v)));
    }
    return out;
}

SubcubeSplit split(int n, int k) {
    if (n < 2) throw InputError("split needs n >= 2");
    if (k < 0 || k >= n) throw InputError("split dimension out of range");
    SubcubeSplit s;
    s.n = n;
    s.k = k;
    if (k == 0) s.normalizer = dimension_exchange(n, n - 1);
    int nv = num_vertices(n);
    for (VertexId id = 0; id < nv; id++) {
        Vertex v = vertex_of(id, n);
        s.parts[s.part_of(v)].push_back(v);
    }
    const BhGraph& g = BhGraph::get(n);
    for (VertexId id = 0; id < nv; id++) {
        Vertex v = vertex_of(id, n);
        for (VertexId wid : g.adj(id)) {
            if (wid < id) continue;
            Edge e(v, vertex_of(wid, n));
            int i = s.cross_index(e);
            if (i >= 0) s.cross[i].push_back(e);
        }
    }
    for (auto& c : s.cross) std::sort(c.begin(), c.end());
    return s;
}

}  // namespace bhdpc
