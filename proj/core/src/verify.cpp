#include "bhdpc/verify.hpp"

#include <set>

namespace bhdpc {

void Instance::check() const {
    if (n < 1) throw InputError("instance order must be at least 1");
    terminals.check(n);
    for (const Edge& e : faults.edges) {
        if (e.u.order() != n)
            throw InputError("fault edge " + e.str() + " has wrong order");
        check_vertex(e.u, n);
        check_vertex(e.v, n);
    }
}

std::vector<std::string> verify_dpc(const Instance& inst, const Dpc2& cand) {
    std::vector<std::string> out;
    const Terminals& t = inst.terminals;

    auto audit_path = [&](const Path& p, const char* name, const Vertex& from,
                          const Vertex& to) {
        if (p.empty()) {
            out.push_back(std::string(name) + " is empty");
            return;
        }
        if (p.front() != from)
            out.push_back(std::string(name) + " starts at " + p.front().str() +
                          ", expected " + from.str());
        if (p.back() != to)
            out.push_back(std::string(name) + " ends at " + p.back().str() + ", expected " +
                          to.str());
        for (const std::string& v : p.violations(inst.n, &inst.faults))
            out.push_back(std::string(name) + ": " + v);
    };
    audit_path(cand.p1, "p1", t.s1, t.t1);
    audit_path(cand.p2, "p2", t.s2, t.t2);

    std::set<Vertex> seen1(cand.p1.vertices.begin(), cand.p1.vertices.end());
    for (const Vertex& v : cand.p2.vertices)
        if (seen1.count(v)) out.push_back("not disjoint at " + v.str());

    std::set<Vertex> all = seen1;
    all.insert(cand.p2.vertices.begin(), cand.p2.vertices.end());
    size_t expect = static_cast<size_t>(num_vertices(inst.n));
    if (all.size() != expect ||
        cand.p1.vertices.size() + cand.p2.vertices.size() != expect)
        out.push_back("covers " + std::to_string(all.size()) + " of " +
                      std::to_string(expect) + " vertices");
    return out;
}

}  // namespace bhdpc
