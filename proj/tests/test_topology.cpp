#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "bhdpc/topology.hpp"

using namespace bhdpc;

namespace {

// Independent adjacency oracle built by the recursive construction: BH_1 is
// the 4-cycle 0-1-2-3-0; BH_{k+1} glues four copies of BH_k (copy index is
// the new outermost coordinate), and every vertex with even inner index gains
// ((a0 +- 1) mod 4, ..., copy+1) while odd inner indices gain the copy-1
// versions. Completely separate from the arithmetic neighbor formulas.
std::set<std::pair<Vertex, Vertex>> recursive_edges(int n) {
    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&edges](Vertex a, Vertex b) {
        if (b < a) std::swap(a, b);
        edges.insert({a, b});
    };
    if (n == 1) {
        for (int i = 0; i < 4; i++) add(Vertex{i}, Vertex{(i + 1) % 4});
        return edges;
    }
    auto sub = recursive_edges(n - 1);
    for (int copy = 0; copy < 4; copy++) {
        for (const auto& [a, b] : sub) {
            Vertex aa = a, bb = b;
            aa.c.push_back(copy);
            bb.c.push_back(copy);
            add(aa, bb);
        }
        for (VertexId id = 0; id < num_vertices(n - 1); id++) {
            Vertex v = vertex_of(id, n - 1);
            int dir = (v.c[0] % 2 == 0) ? 1 : -1;
            for (int delta : {1, -1}) {
                Vertex w = v;
                w.c[0] = ((v.c[0] + delta) % 4 + 4) % 4;
                w.c.push_back(((copy + dir) % 4 + 4) % 4);
                Vertex vv = v;
                vv.c.push_back(copy);
                add(vv, w);
            }
        }
    }
    return edges;
}

std::set<std::pair<Vertex, Vertex>> formula_edges(int n) {
    std::set<std::pair<Vertex, Vertex>> edges;
    for (VertexId id = 0; id < num_vertices(n); id++) {
        Vertex v = vertex_of(id, n);
        for (const Vertex& w : neighbors(v, n)) {
            Vertex a = v, b = w;
            if (b < a) std::swap(a, b);
            edges.insert({a, b});
        }
    }
    return edges;
}

}  // namespace

TEST_CASE("adjacency matches the recursive construction") {
    for (int n = 1; n <= 4; n++) {
        CAPTURE(n);
        CHECK(formula_edges(n) == recursive_edges(n));
    }
}

TEST_CASE("neighbor examples") {
    CHECK(neighbors({0, 0}, 2) ==
          std::vector<Vertex>{{1, 0}, {1, 1}, {3, 0}, {3, 1}});
    CHECK(neighbors({0}, 1) == std::vector<Vertex>{{1}, {3}});
    CHECK(neighbors({1, 1}, 2) ==
          std::vector<Vertex>{{0, 0}, {0, 1}, {2, 0}, {2, 1}});
}

TEST_CASE("edge dimensions") {
    CHECK(edge_dimension({0, 0}, {1, 0}) == 0);
    CHECK(edge_dimension({0, 0}, {3, 1}) == 1);
    CHECK_THROWS_AS(edge_dimension({0, 0}, {2, 0}), NotAdjacent);
    CHECK(edge_dimension({0, 0, 0}, {1, 0, 1}) == 2);
}

TEST_CASE("twins") {
    CHECK(twin({0, 0}) == Vertex{2, 0});
    CHECK(twin({1, 2}) == Vertex{3, 2});
    CHECK(twin(twin({3, 1, 2})) == Vertex{3, 1, 2});
}

TEST_CASE("common neighbors") {
    CHECK(common_neighbors({0, 0}, {2, 0}, 2) ==
          std::vector<Vertex>{{1, 0}, {1, 1}, {3, 0}, {3, 1}});
    CHECK(common_neighbors({0, 0}, {0, 1}, 2) == std::vector<Vertex>{{1, 1}, {3, 1}});
    CHECK(common_neighbors({0, 0}, {2, 2}, 2).empty());
}

TEST_CASE("distances") {
    CHECK(distance({0, 0}, {0, 0}, 2) == 0);
    CHECK(distance({0, 0}, {1, 0}, 2) == 1);
    CHECK(distance({0, 0}, {2, 0}, 2) == 2);
}

TEST_CASE("degree, bipartiteness, twin and common-neighbor counts") {
    for (int n = 1; n <= 3; n++) {
        CAPTURE(n);
        int nv = num_vertices(n);
        for (VertexId id = 0; id < nv; id++) {
            Vertex v = vertex_of(id, n);
            auto nb = neighbors(v, n);
            CHECK(static_cast<int>(nb.size()) == 2 * n);
            for (const Vertex& w : nb) {
                CHECK(w.side() != v.side());
                auto back = neighbors(w, n);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
            CHECK(twin(v) != v);
            CHECK(neighbors(twin(v), n) == nb);
        }
        for (VertexId a = 0; a < nv; a++) {
            Vertex u = vertex_of(a, n);
            int partners_2n = 0;
            for (VertexId b = 0; b < nv; b++) {
                if (a == b) continue;
                Vertex v = vertex_of(b, n);
                int k = static_cast<int>(common_neighbors(u, v, n).size());
                CHECK((k == 0 || k == 2 || k == 2 * n));
                if (k == 2 * n) {
                    partners_2n++;
                    CHECK(v == twin(u));
                }
            }
            CHECK(partners_2n == 1);
        }
    }
}

TEST_CASE("vertex ids are lexicographic ranks") {
    for (int n = 1; n <= 3; n++) {
        for (VertexId id = 0; id + 1 < num_vertices(n); id++) {
            CHECK(vertex_id(vertex_of(id, n)) == id);
            CHECK(vertex_of(id, n) < vertex_of(id + 1, n));
        }
    }
    CHECK_THROWS_AS(check_vertex(Vertex{0, 4}, 2), InputError);
    CHECK_THROWS_AS(check_vertex(Vertex{0, 0}, 3), InputError);
}

TEST_CASE("fault sets deduplicate and tally") {
    FaultSet f;
    f.insert(Edge({0, 0}, {1, 0}));
    f.insert(Edge({1, 0}, {0, 0}));
    f.insert(Edge({0, 0}, {1, 1}));
    CHECK(f.size() == 2);
    CHECK(f.contains(Edge({0, 0}, {1, 0})));
    CHECK(f.per_dimension(2) == std::vector<int>{1, 1});
    CHECK(f.count_at({0, 0}) == 2);
    CHECK(f.count_at({0, 0}, 1) == 1);
    CHECK(f.count_at({2, 0}) == 0);
}

namespace {

void check_split_invariants(int n, int k) {
    CAPTURE(n);
    CAPTURE(k);
    SubcubeSplit s = split(n, k);
    int quarter = num_vertices(n) / 4;
    std::set<Vertex> all;
    for (int i = 0; i < 4; i++) {
        CHECK(static_cast<int>(s.parts[i].size()) == quarter);
        for (const Vertex& v : s.parts[i]) {
            CHECK(s.part_of(v) == i);
            all.insert(v);
        }
    }
    CHECK(static_cast<int>(all.size()) == num_vertices(n));

    // Down-maps are isomorphisms onto BH_{n-1}: bijective, and adjacency
    // inside a part matches adjacency of the images exactly.
    for (int i = 0; i < 4; i++) {
        std::set<Vertex> images;
        for (const Vertex& v : s.parts[i]) {
            Vertex d = s.down(v);
            CHECK(d.order() == n - 1);
            images.insert(d);
            CHECK(s.up(i, d) == v);
        }
        CHECK(static_cast<int>(images.size()) == quarter);
        for (const Vertex& u : s.parts[i])
            for (const Vertex& v : s.parts[i]) {
                if (!(u < v)) continue;
                CHECK(adjacent(u, v) == adjacent(s.down(u), s.down(v)));
            }
    }

    // Cross-edge counts; each cross edge joins consecutive parts with the
    // even endpoint on the lower side; no part links to the opposite part.
    for (int i = 0; i < 4; i++) {
        CHECK(static_cast<int>(s.cross[i].size()) == quarter);
        for (const Edge& e : s.cross[i]) {
            CHECK(s.cross_index(e) == i);
            const Vertex& lo = s.lower_endpoint(e);
            CHECK(s.part_of(lo) == i);
            CHECK(s.part_of(e.other(lo)) == (i + 1) % 4);
            CHECK(lo.side() == 0);
        }
    }
    const BhGraph& g = BhGraph::get(n);
    for (VertexId a = 0; a < g.nv(); a++)
        for (VertexId b : g.adj(a)) {
            if (b < a) continue;
            Edge e(vertex_of(a, n), vertex_of(b, n));
            int pa = s.part_of(e.u), pb = s.part_of(e.v);
            CHECK((pa - pb + 4) % 4 != 2);
            if (pa != pb) CHECK(s.cross_index(e) >= 0);
        }
}

}  // namespace

TEST_CASE("splits along every dimension") {
    for (int n = 2; n <= 3; n++)
        for (int k = 0; k < n; k++) check_split_invariants(n, k);
    check_split_invariants(4, 3);
    check_split_invariants(4, 0);
}

TEST_CASE("split example at n=2") {
    SubcubeSplit s = split(2, 1);
    std::vector<Edge> expect = {Edge({0, 0}, {1, 1}), Edge({0, 0}, {3, 1}),
                                Edge({2, 0}, {1, 1}), Edge({2, 0}, {3, 1})};
    std::sort(expect.begin(), expect.end());
    CHECK(s.cross[0] == expect);
    CHECK(!s.normalizer.has_value());
    CHECK(split(2, 0).normalizer.has_value());
    CHECK_THROWS_AS(split(1, 0), InputError);
}

TEST_CASE("outer translate") {
    Automorphism a = outer_translate(2, 1, 1);
    CHECK(a.apply({0, 0}) == Vertex{0, 1});
    CHECK(a.valid());
    CHECK(outer_translate(2, 1, 4).apply({1, 3}) == Vertex{1, 3});
    Automorphism b = outer_translate(2, 1, 3);
    Automorphism c = Automorphism::compose(a, b);
    for (VertexId id = 0; id < 16; id++) CHECK(c.fwd[id] == id);
    CHECK_THROWS_AS(outer_translate(2, 0, 1), InputError);

    // Rotating coordinate j relabels the split-j parts cyclically.
    SubcubeSplit s = split(2, 1);
    for (VertexId id = 0; id < 16; id++) {
        Vertex v = vertex_of(id, 2);
        CHECK(s.part_of(a.apply(v)) == (s.part_of(v) + 1) % 4);
    }
}

TEST_CASE("twin shift") {
    Automorphism a = inner_translate_2(2);
    CHECK(a.apply({0, 0}) == Vertex{2, 0});
    CHECK(a.valid());
    CHECK(a.apply({0, 0}).side() == 0);
    CHECK(adjacent(a.apply({0, 0}), a.apply({1, 1})));
    for (VertexId id = 0; id < 16; id++) CHECK(a.inv[a.fwd[id]] == id);
}

TEST_CASE("dimension exchange") {
    CHECK(dimension_exchange(3, 0).fwd == identity_automorphism(3).fwd);
    for (auto [n, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        CAPTURE(n);
        CAPTURE(j);
        Automorphism a = dimension_exchange(n, j);
        CHECK(a.valid());
        const BhGraph& g = BhGraph::get(n);
        for (VertexId u = 0; u < g.nv(); u++) {
            for (VertexId w : g.adj(u)) {
                bool zero = g.edge_dim(u, w) == 0;
                CHECK(zero == (g.edge_dim(a.fwd[u], a.fwd[w]) == j));
            }
            // Parity is preserved pointwise, so split directions stay aligned.
            CHECK(vertex_of(u, n).side() == vertex_of(a.fwd[u], n).side());
        }
    }
}

TEST_CASE("parity flip preserves dimensions and swaps sides") {
    for (int n = 2; n <= 3; n++) {
        const BhGraph& g = BhGraph::get(n);
        for (VertexId id = 0; id < g.nv(); id++) {
            Vertex v = vertex_of(id, n);
            Vertex fv = parity_flip(v);
            CHECK(fv.side() == 1 - v.side());
            for (VertexId wid : g.adj(id)) {
                Vertex w = vertex_of(wid, n);
                CHECK(edge_dimension(fv, parity_flip(w)) == edge_dimension(v, w));
            }
        }
    }
}

TEST_CASE("automorphism application helpers") {
    Automorphism a = outer_translate(2, 1, 2);
    FaultSet f;
    f.insert(Edge({0, 0}, {1, 0}));
    f.insert(Edge({0, 1}, {1, 2}));
    FaultSet fa = a.apply(f);
    CHECK(fa.size() == 2);
    CHECK(fa.contains(Edge({0, 2}, {1, 2})));
    CHECK(fa.contains(Edge({0, 3}, {1, 0})));
    CHECK(a.inverse().apply(fa) == f);
    CHECK(a.apply(Edge({0, 0}, {1, 1})) == Edge({0, 2}, {1, 3}));
}
