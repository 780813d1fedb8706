#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "bhdpc/errors.hpp"

// Coordinate model of the balanced hypercube BH_n.
//
// A vertex is a vector (a0, a1, ..., a_{n-1}) with every entry in {0,1,2,3}.
// a0 is the inner index, the rest are outer indices. The 2n neighbors of v:
//   dimension 0:   ((a0 +- 1) mod 4, a1, ..., a_{n-1})
//   dimension j>0: ((a0 +- 1) mod 4, ..., (a_j + (-1)^{a0}) mod 4, ...)
// Edges split into dimension classes E_0..E_{n-1}; the graph is bipartite by
// the parity of a0, and v's twin ((a0+2) mod 4, ...) has the same neighborhood.

namespace bhdpc {

using Coord = int;

struct Vertex {
    std::vector<Coord> c;  // c[0] inner, c[1..] outer

    Vertex() = default;
    explicit Vertex(std::vector<Coord> coords) : c(std::move(coords)) {}
    Vertex(std::initializer_list<Coord> coords) : c(coords) {}

    int order() const { return static_cast<int>(c.size()); }
    int side() const { return c[0] & 1; }  // partite side, 0 = even inner index

    auto operator<=>(const Vertex&) const = default;

    std::string str() const;
};

// Lexicographic rank of v among all 4^n vertices, inner index most significant.
using VertexId = int;

int num_vertices(int n);  // 4^n
VertexId vertex_id(const Vertex& v);
Vertex vertex_of(VertexId id, int n);

// Throws InputError when v is not a valid order-n vertex.
void check_vertex(const Vertex& v, int n);

Vertex twin(const Vertex& v);
bool adjacent(const Vertex& u, const Vertex& v);
std::vector<Vertex> neighbors(const Vertex& v, int n);

// The reflection (a0, a1, ...) -> ((1 - a0) mod 4, -a1, ...). It preserves
// adjacency and every dimension class, swaps the partite sides, and negates
// subcube labels under any outer-dimension split.
Vertex parity_flip(const Vertex& v);

// Dimension k such that uv is a k-dimension edge. Throws NotAdjacent.
int edge_dimension(const Vertex& u, const Vertex& v);

std::vector<Vertex> common_neighbors(const Vertex& u, const Vertex& v, int n);
int distance(const Vertex& u, const Vertex& v, int n);

struct Edge {
    Vertex u, v;  // normalized so that u < v

    Edge() = default;
    Edge(const Vertex& a, const Vertex& b);  // throws NotAdjacent

    int dimension() const { return edge_dimension(u, v); }
    bool touches(const Vertex& x) const { return u == x || v == x; }
    const Vertex& other(const Vertex& x) const;

    auto operator<=>(const Edge&) const = default;

    std::string str() const;
};

struct FaultSet {
    // Sorted, deduplicated.
    std::vector<Edge> edges;

    FaultSet() = default;
    explicit FaultSet(const std::vector<Edge>& es);

    void insert(const Edge& e);
    bool contains(const Edge& e) const;
    bool contains(const Vertex& a, const Vertex& b) const;
    int size() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }

    int count_in_dimension(int k) const;
    std::vector<int> per_dimension(int n) const;

    // Faults incident to v, optionally restricted to dimension k.
    int count_at(const Vertex& v) const;
    int count_at(const Vertex& v, int k) const;

    auto operator<=>(const FaultSet&) const = default;
};

// Precomputed adjacency for one order, shared and immutable once built.
class BhGraph {
public:
    static const BhGraph& get(int n);  // memoized; n in [1,6]

    int n() const { return n_; }
    int nv() const { return nv_; }
    const std::vector<VertexId>& adj(VertexId v) const { return adj_[v]; }
    // -1 when not adjacent.
    int edge_dim(VertexId u, VertexId v) const { return dim_[u * nv_ + v]; }
    bool adjacent(VertexId u, VertexId v) const { return dim_[u * nv_ + v] >= 0; }
    VertexId twin_id(VertexId v) const { return twin_[v]; }
    Vertex vertex(VertexId id) const { return vertex_of(id, n_); }

private:
    explicit BhGraph(int n);
    int n_, nv_;
    std::vector<std::vector<VertexId>> adj_;  // lex-sorted neighbor lists
    std::vector<int8_t> dim_;                 // flattened nv x nv edge-dimension table
    std::vector<VertexId> twin_;
};

struct Automorphism {
    int n = 0;
    std::vector<VertexId> fwd, inv;  // permutations of the 4^n vertex ids
    std::string description;

    Vertex apply(const Vertex& v) const;
    Vertex apply_inverse(const Vertex& v) const;
    Edge apply(const Edge& e) const;
    FaultSet apply(const FaultSet& f) const;
    std::vector<Vertex> apply(const std::vector<Vertex>& vs) const;

    Automorphism inverse() const;

    // h = f after g, i.e. h.apply(v) = f.apply(g.apply(v)).
    static Automorphism compose(const Automorphism& f, const Automorphism& g);

    // Full adjacency-preservation check over every edge.
    bool valid() const;
};

Automorphism identity_automorphism(int n);

// coords[j] += c (mod 4), j >= 1. Rotates the dimension-j subcube labels.
Automorphism outer_translate(int n, int j, int c);

// v -> twin(v). Fixes both partite sides.
Automorphism inner_translate_2(int n);

// An automorphism mapping E_0 onto E_j, found once per (n, j) by constrained
// backtracking and memoized. j = 0 gives the identity.
Automorphism dimension_exchange(int n, int j);

struct SubcubeSplit {
    int n = 0;
    int k = 0;  // requested split dimension
    // Present when k = 0: the dimension-exchange automorphism through which
    // the split is realized (parts are its preimages of a coordinate split).
    std::optional<Automorphism> normalizer;

    std::array<std::vector<Vertex>, 4> parts;  // lex-sorted, sizes 4^{n-1}
    std::array<std::vector<Edge>, 4> cross;    // cross[i] = E_{i,i+1}, lex-sorted

    int part_of(const Vertex& v) const;
    // Isomorphism from the induced subgraph on part i onto BH_{n-1}.
    Vertex down(const Vertex& v) const;
    Vertex up(int part, const Vertex& child) const;
    std::vector<Vertex> up(int part, const std::vector<Vertex>& children) const;

    // i such that e lies in cross[i]; -1 for intra-part edges.
    int cross_index(const Edge& e) const;
    // For e in cross[i]: the endpoint lying in part i.
    const Vertex& lower_endpoint(const Edge& e) const;

    FaultSet faults_in_part(const FaultSet& f, int part) const;  // down-mapped
};

SubcubeSplit split(int n, int k);

}  // namespace bhdpc
