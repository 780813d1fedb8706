#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bhdpc/topology.hpp"

namespace bhdpc {

struct Path {
    std::vector<Vertex> vertices;

    Path() = default;
    explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool empty() const { return vertices.empty(); }
    const Vertex& front() const { return vertices.front(); }
    const Vertex& back() const { return vertices.back(); }

    Path reversed() const;

    // Distinct vertices, consecutive adjacency, alternating partite sides,
    // no faulty edge traversed. Throws nothing; returns the violations.
    std::vector<std::string> violations(int n, const FaultSet* faults = nullptr) const;
    bool ok(int n, const FaultSet* faults = nullptr) const {
        return violations(n, faults).empty();
    }

    bool contains_edge(const Vertex& a, const Vertex& b) const;
    std::string str() const;
};

// Cut the path after edge edge_index: ({v0..vi}, {v(i+1)..}). Both pieces are
// nonempty. Throws InputError when the index is out of range.
std::pair<Path, Path> split_path_at(const Path& p, int edge_index);

struct Terminals {
    Vertex s1, s2, t1, t2;

    // s1 != s2, t1 != t2, {s1,s2} on one partite side and {t1,t2} on the
    // other. Throws InputError otherwise.
    void check(int n) const;

    bool is_terminal(const Vertex& v) const {
        return v == s1 || v == s2 || v == t1 || v == t2;
    }
};

struct Dpc2 {
    Path p1;  // s1 -> t1
    Path p2;  // s2 -> t2
};

}  // namespace bhdpc
