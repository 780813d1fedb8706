#include "bhdpc/paths.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bhdpc {

Path Path::reversed() const {
    Path out;
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    return out;
}

std::vector<std::string> Path::violations(int n, const FaultSet* faults) const {
    std::vector<std::string> out;
    if (vertices.empty()) {
        out.push_back("empty path");
        return out;
    }
    std::set<Vertex> seen;
    for (const Vertex& v : vertices) {
        try {
            check_vertex(v, n);
        } catch (const InputError& e) {
            out.push_back(e.what());
            return out;
        }
        if (!seen.insert(v).second) out.push_back("repeated vertex " + v.str());
    }
    for (size_t i = 0; i + 1 < vertices.size(); i++) {
        const Vertex &a = vertices[i], &b = vertices[i + 1];
        if (!adjacent(a, b)) {
            out.push_back("not adjacent: " + a.str() + " " + b.str());
            continue;
        }
        if (a.side() == b.side())
            out.push_back("does not alternate sides at " + a.str());
        if (faults && faults->contains(Edge(a, b)))
            out.push_back("faulty edge used: " + Edge(a, b).str());
    }
    return out;
}

bool Path::contains_edge(const Vertex& a, const Vertex& b) const {
    for (size_t i = 0; i + 1 < vertices.size(); i++) {
        if (vertices[i] == a && vertices[i + 1] == b) return true;
        if (vertices[i] == b && vertices[i + 1] == a) return true;
    }
    return false;
}

std::string Path::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < vertices.size(); i++) {
        if (i) os << ' ';
        os << vertices[i].str();
    }
    return os.str();
}

std::pair<Path, Path> split_path_at(const Path& p, int edge_index) {
    if (edge_index < 0 || edge_index >= p.length())
        throw InputError("split_path_at: edge index out of range");
    Path head, tail;
    head.vertices.assign(p.vertices.begin(), p.vertices.begin() + edge_index + 1);
    tail.vertices.assign(p.vertices.begin() + edge_index + 1, p.vertices.end());
    return {head, tail};
}

void Terminals::check(int n) const {
    check_vertex(s1, n);
    check_vertex(s2, n);
    check_vertex(t1, n);
    check_vertex(t2, n);
    if (s1 == s2) throw InputError("terminals: s1 = s2");
    if (t1 == t2) throw InputError("terminals: t1 = t2");
    if (s1.side() != s2.side()) throw InputError("terminals: s1, s2 on different partite sides");
    if (t1.side() != t2.side()) throw InputError("terminals: t1, t2 on different partite sides");
    if (s1.side() == t1.side())
        throw InputError("terminals: sources and sinks on the same partite side");
}

}  // namespace bhdpc
