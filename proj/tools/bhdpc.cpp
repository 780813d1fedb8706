#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhdpc/constructor.hpp"
#include "bhdpc/errors.hpp"
#include "bhdpc/oracle.hpp"
#include "bhdpc/topology.hpp"
#include "bhdpc/verify.hpp"

// Exit codes across all subcommands: 0 solved/ok, 1 infeasible or invalid
// cover, 2 bad input, 3 internal error or inconclusive search.

using json = nlohmann::ordered_json;
using namespace bhdpc;

namespace {

struct ParseFail {
    std::string msg;
};

// ---- serialization -------------------------------------------------------

json coords_json(const Vertex& v) { return json(v.c); }

json edge_json(const Edge& e) { return json::array({coords_json(e.u), coords_json(e.v)}); }

json path_json(const Path& p) {
    json out = json::array();
    for (const Vertex& v : p.vertices) out.push_back(coords_json(v));
    return out;
}

json instance_json(const Instance& inst) {
    json out;
    out["n"] = inst.n;
    json fs = json::array();
    for (const Edge& e : inst.faults.edges) fs.push_back(edge_json(e));
    out["faults"] = fs;
    out["terminals"] = {{"s1", coords_json(inst.terminals.s1)},
                        {"s2", coords_json(inst.terminals.s2)},
                        {"t1", coords_json(inst.terminals.t1)},
                        {"t2", coords_json(inst.terminals.t2)}};
    return out;
}

json certificate_json(const Certificate& c) {
    json out;
    out["kind"] =
        c.kind == Certificate::Kind::BlockedVertex ? "blocked-vertex" : "exhausted-search";
    if (c.kind == Certificate::Kind::BlockedVertex) {
        out["witness"] = coords_json(c.witness);
        json fe = json::array();
        for (const Edge& e : c.free_edges) fe.push_back(edge_json(e));
        out["free_edges"] = fe;
        out["leads_to"] = c.into_sources ? "sources" : "sinks";
    }
    return out;
}

json plan_json(const CasePlan& plan) {
    json out;
    out["order"] = plan.n;
    if (plan.k >= 0) {
        out["split"] = plan.k;
        out["base_part"] = plan.base_part;
        out["renames"] = plan.renames;
    }
    out["layout"] = plan.tag;
    json picks = json::array();
    for (const CrossPick& p : plan.picks)
        picks.push_back({{"role", p.role}, {"edge", edge_json(p.edge)}});
    out["picks"] = picks;
    if (plan.anchor) {
        const CycleAnchor& an = *plan.anchor;
        out["anchor"] = {{"part", an.part},          {"a", coords_json(an.a)},
                         {"b", coords_json(an.b)},   {"c", coords_json(an.c)},
                         {"d", coords_json(an.d)},   {"u", coords_json(an.u)},
                         {"path", path_json(an.p)}};
    }
    if (plan.cover) {
        const BridgedPartCover& cv = *plan.cover;
        out["cover"] = {{"part", cv.part},        {"u", coords_json(cv.u)},
                        {"a", coords_json(cv.a)}, {"b", coords_json(cv.b)},
                        {"c", coords_json(cv.c)}, {"p", path_json(cv.p)},
                        {"q", path_json(cv.q)}};
    }
    return out;
}

// ---- parsing with field-path diagnostics ---------------------------------

Vertex parse_vertex(const json& j, int n, const std::string& path) {
    if (!j.is_array())
        throw ParseFail{path + " must be an array of " + std::to_string(n) +
                        " coordinates"};
    if (static_cast<int>(j.size()) != n)
        throw ParseFail{path + " must hold exactly " + std::to_string(n) +
                        " coordinates, got " + std::to_string(j.size())};
    std::vector<Coord> cs(n);
    for (int i = 0; i < n; i++) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_number_integer()) throw ParseFail{at + " must be an integer"};
        const long long c = j[i].get<long long>();
        if (c < 0 || c > 3)
            throw ParseFail{at + " must be in 0..3, got " + std::to_string(c)};
        cs[i] = static_cast<Coord>(c);
    }
    return Vertex(cs);
}

Instance parse_instance(const json& j) {
    if (!j.is_object()) throw ParseFail{"instance file must be a JSON object"};
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseFail{"n must be an integer"};
    const int n = j["n"].get<int>();
    if (n < 1 || n > 12) throw ParseFail{"n must be in 1..12, got " + std::to_string(n)};
    Instance inst;
    inst.n = n;
    if (j.contains("faults")) {
        if (!j["faults"].is_array()) throw ParseFail{"faults must be an array of edges"};
        for (size_t i = 0; i < j["faults"].size(); i++) {
            const std::string at = "faults[" + std::to_string(i) + "]";
            const json& ej = j["faults"][i];
            if (!ej.is_array() || ej.size() != 2)
                throw ParseFail{at + " must be a pair of vertices"};
            Vertex u = parse_vertex(ej[0], n, at + "[0]");
            Vertex v = parse_vertex(ej[1], n, at + "[1]");
            try {
                inst.faults.insert(Edge(u, v));
            } catch (const NotAdjacent&) {
                throw ParseFail{at + ": " + u.str() + " and " + v.str() +
                                " are not adjacent"};
            }
        }
    }
    if (!j.contains("terminals") || !j["terminals"].is_object())
        throw ParseFail{"terminals must be an object with s1, s2, t1, t2"};
    const json& t = j["terminals"];
    auto term = [&](const char* name) {
        if (!t.contains(name))
            throw ParseFail{std::string("terminals.") + name + " is missing"};
        return parse_vertex(t[name], n, std::string("terminals.") + name);
    };
    inst.terminals.s1 = term("s1");
    inst.terminals.s2 = term("s2");
    inst.terminals.t1 = term("t1");
    inst.terminals.t2 = term("t2");
    try {
        inst.check();
    } catch (const InputError& e) {
        throw ParseFail{e.what()};
    }
    return inst;
}

json load_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseFail{"cannot open " + file};
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseFail{file + ": " + e.what()};
    }
    return j;
}

Dpc2 parse_result_paths(const json& j) {
    if (!j.is_object() || !j.contains("p1") || !j.contains("p2"))
        throw ParseFail{"result file must hold p1 and p2 vertex lists"};
    if (j.contains("status") && j["status"] != "solved")
        throw ParseFail{"result file status is not \"solved\""};
    auto parse_path = [&](const char* name) {
        const json& pj = j[name];
        if (!pj.is_array() || pj.empty())
            throw ParseFail{std::string(name) + " must be a non-empty array"};
        const json& first = pj[0];
        if (!first.is_array()) throw ParseFail{std::string(name) + "[0] must be an array"};
        const int n = static_cast<int>(first.size());
        Path p;
        for (size_t i = 0; i < pj.size(); i++)
            p.vertices.push_back(
                parse_vertex(pj[i], n, std::string(name) + "[" + std::to_string(i) + "]"));
        return p;
    };
    return {parse_path("p1"), parse_path("p2")};
}

Vertex parse_coords_arg(const std::string& s, int n, const std::string& name) {
    std::vector<Coord> cs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            const int c = std::stoi(tok, &used);
            if (used != tok.size() || c < 0 || c > 3) throw std::invalid_argument(tok);
            cs.push_back(c);
        } catch (const std::exception&) {
            throw ParseFail{name + ": \"" + tok + "\" is not a coordinate in 0..3"};
        }
    }
    if (static_cast<int>(cs.size()) != n)
        throw ParseFail{name + " must hold " + std::to_string(n) + " coordinates"};
    return Vertex(cs);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands ---------------------------------------------------------

int cmd_solve(const std::string& file, bool trace, bool fallback) {
    const Instance inst = parse_instance(load_json(file));
    json out;
    try {
        Dpc2 d = solve(inst);
        out["status"] = "solved";
        out["p1"] = path_json(d.p1);
        out["p2"] = path_json(d.p2);
        if (trace) out["case_plan"] = plan_json(explain(inst));
        emit(out);
        return 0;
    } catch (const FaultBudgetExceeded& e) {
        out["status"] = "infeasible";
        out["reason"] = e.what();
        if (auto c = infeasibility_certificate(inst)) out["certificate"] = certificate_json(*c);
        emit(out);
        return 1;
    } catch (const InternalError& e) {
        out["status"] = "error";
        out["reason"] = e.what();
        if (fallback && inst.n <= 3) {
            const OracleResult r = brute_force_dpc(inst);
            switch (r.status) {
                case OracleStatus::Exists:
                    out["oracle"] = "exists";
                    out["discrepancy"] = "a cover exists but the construction missed it";
                    break;
                case OracleStatus::NotExists:
                    out["oracle"] = "not-exists";
                    out["discrepancy"] = "no cover exists within the stated fault budget";
                    break;
                case OracleStatus::Timeout:
                    out["oracle"] = "timeout";
                    out["discrepancy"] = "oracle inconclusive within budget";
                    break;
            }
        }
        emit(out);
        return 3;
    }
}

int cmd_verify(const std::string& inst_file, const std::string& result_file) {
    const Instance inst = parse_instance(load_json(inst_file));
    const Dpc2 cand = parse_result_paths(load_json(result_file));
    const std::vector<std::string> bad = verify_dpc(inst, cand);
    json out;
    if (bad.empty()) {
        out["status"] = "ok";
        emit(out);
        return 0;
    }
    out["status"] = "invalid";
    out["violations"] = bad;
    emit(out);
    return 1;
}

int cmd_oracle(const std::string& file, long long budget) {
    const Instance inst = parse_instance(load_json(file));
    const auto t0 = std::chrono::steady_clock::now();
    const OracleResult r = brute_force_dpc(inst, budget);
    const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    json out;
    out["instance"] = instance_json(inst);
    out["status"] = r.status == OracleStatus::Exists      ? "exists"
                    : r.status == OracleStatus::NotExists ? "not-exists"
                                                          : "timeout";
    if (r.status == OracleStatus::Exists) {
        out["p1"] = path_json(r.dpc.p1);
        out["p2"] = path_json(r.dpc.p2);
    }
    if (r.status == OracleStatus::NotExists) {
        if (auto c = infeasibility_certificate(inst)) {
            out["certificate"] = certificate_json(*c);
        } else {
            Certificate ex;
            ex.kind = Certificate::Kind::ExhaustedSearch;
            out["certificate"] = certificate_json(ex);
        }
    }
    out["expansions"] = r.expansions;
    out["millis"] = millis;
    emit(out);
    return r.status == OracleStatus::Exists ? 0 : r.status == OracleStatus::NotExists ? 1 : 3;
}

int cmd_counterexample(int n, const std::string& s1s, const std::string& ws,
                       const std::string& t1s, const std::string& t2s) {
    const Vertex s1 = parse_coords_arg(s1s, n, "--s1");
    const Vertex w = parse_coords_arg(ws, n, "--w");
    const Vertex t1 = parse_coords_arg(t1s, n, "--t1");
    const Vertex t2 = parse_coords_arg(t2s, n, "--t2");
    try {
        const Instance inst = counterexample_instance(n, s1, w, t1, t2);
        emit(instance_json(inst));
        return 0;
    } catch (const InputError& e) {
        throw ParseFail{e.what()};
    }
}

std::string dot_name(const Vertex& v) {
    std::string s = "v_";
    for (Coord c : v.c) s += static_cast<char>('0' + c);
    return s;
}

int cmd_export(int n_flag, const std::string& inst_file, const std::string& result_file) {
    std::optional<Instance> inst;
    std::optional<Dpc2> result;
    if (!inst_file.empty()) inst = parse_instance(load_json(inst_file));
    if (!result_file.empty()) result = parse_result_paths(load_json(result_file));
    int n = n_flag;
    if (inst) n = inst->n;
    else if (result && !result->p1.empty()) n = result->p1.front().order();
    if (n < 1) throw ParseFail{"export needs --n or --instance"};
    if (n > 4) throw ParseFail{"full-graph export is limited to n <= 4"};

    const BhGraph& g = BhGraph::get(n);
    auto path_set = [](const Path& p) {
        std::vector<std::pair<Vertex, Vertex>> s;
        for (size_t i = 0; i + 1 < p.vertices.size(); i++) {
            Vertex a = p.vertices[i], b = p.vertices[i + 1];
            if (b < a) std::swap(a, b);
            s.push_back({a, b});
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::pair<Vertex, Vertex>> e1, e2;
    if (result) {
        e1 = path_set(result->p1);
        e2 = path_set(result->p2);
    }
    auto in_set = [](const std::vector<std::pair<Vertex, Vertex>>& s, const Vertex& a,
                     const Vertex& b) {
        return std::binary_search(s.begin(), s.end(), std::make_pair(a, b));
    };

    std::ostringstream os;
    os << "graph bh" << n << " {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (VertexId id = 0; id < g.nv(); id++) {
        const Vertex v = g.vertex(id);
        os << "  " << dot_name(v) << " [label=\"" << v.str() << "\"";
        if (result) {
            const bool on1 =
                std::find(result->p1.vertices.begin(), result->p1.vertices.end(), v) !=
                result->p1.vertices.end();
            const bool on2 =
                std::find(result->p2.vertices.begin(), result->p2.vertices.end(), v) !=
                result->p2.vertices.end();
            if (on1) os << " style=filled fillcolor=\"#cfe2ff\"";
            else if (on2) os << " style=filled fillcolor=\"#ffd9cf\"";
        }
        os << "];\n";
    }
    for (VertexId id = 0; id < g.nv(); id++) {
        const Vertex v = g.vertex(id);
        for (VertexId wid : g.adj(id)) {
            if (wid < id) continue;
            const Vertex w = g.vertex(wid);
            os << "  " << dot_name(v) << " -- " << dot_name(w);
            std::vector<std::string> attrs;
            if (inst && inst->faults.contains(v, w))
                attrs.push_back("style=dashed color=gray");
            else if (result && in_set(e1, v, w))
                attrs.push_back("color=\"#1f5fbf\" penwidth=2.5");
            else if (result && in_set(e2, v, w))
                attrs.push_back("color=\"#bf3f1f\" penwidth=2.5");
            if (!attrs.empty()) {
                os << " [" << attrs[0] << "]";
            }
            os << ";\n";
        }
    }
    os << "}\n";
    std::cout << os.str();
    return 0;
}

int cmd_info(int n) {
    json out;
    out["tool"] = "bhdpc";
    out["version"] = "1.0.0";
    out["summary"] =
        "balanced-hypercube paired two-disjoint path covers under edge faults";
    if (n >= 1) {
        out["order"] = n;
        out["vertices"] = num_vertices(n);
        out["edges"] = static_cast<long long>(n) * num_vertices(n);
        out["degree"] = 2 * n;
        out["fault_budget"] = 2 * n - 3;
        out["parts_per_split"] = 4;
    }
    emit(out);
    return 0;
}

// ---- sweeps --------------------------------------------------------------

std::vector<Edge> edge_pool(int n) {
    const BhGraph& g = BhGraph::get(n);
    std::vector<Edge> out;
    for (VertexId v = 0; v < g.nv(); v++)
        for (VertexId w : g.adj(v))
            if (v < w) out.push_back(Edge(g.vertex(v), g.vertex(w)));
    return out;
}

std::vector<Instance> gen_bh2_all() {
    std::vector<Vertex> side0, side1;
    for (VertexId id = 0; id < 16; id++) {
        Vertex v = vertex_of(id, 2);
        (v.side() == 0 ? side0 : side1).push_back(v);
    }
    std::vector<FaultSet> fault_options;
    fault_options.push_back({});
    for (const Edge& e : edge_pool(2)) {
        FaultSet f;
        f.insert(e);
        fault_options.push_back(f);
    }
    std::vector<Instance> out;
    for (const FaultSet& f : fault_options)
        for (size_t i = 0; i < side0.size(); i++)
            for (size_t j = i + 1; j < side0.size(); j++)  // unordered source pair
                for (const Vertex& t1 : side1)
                    for (const Vertex& t2 : side1) {
                        if (t1 == t2) continue;
                        Instance inst;
                        inst.n = 2;
                        inst.faults = f;
                        inst.terminals.s1 = side0[i];
                        inst.terminals.s2 = side0[j];
                        inst.terminals.t1 = t1;
                        inst.terminals.t2 = t2;
                        out.push_back(std::move(inst));
                    }
    return out;
}

std::vector<Instance> gen_random(int n, int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    const std::vector<Edge> pool = edge_pool(n);
    std::vector<Vertex> side0, side1;
    for (VertexId id = 0; id < num_vertices(n); id++) {
        Vertex v = vertex_of(id, n);
        (v.side() == 0 ? side0 : side1).push_back(v);
    }
    const int budget = 2 * n - 3;
    std::vector<Instance> out;
    out.reserve(count);
    std::vector<size_t> idx(pool.size());
    for (int t = 0; t < count; t++) {
        Instance inst;
        inst.n = n;
        const int nf = static_cast<int>(rng() % (budget + 1));
        // partial shuffle: uniform draw without replacement
        for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
        for (int i = 0; i < nf; i++) {
            const size_t j = i + rng() % (idx.size() - i);
            std::swap(idx[i], idx[j]);
            inst.faults.insert(pool[idx[i]]);
        }
        inst.terminals.s1 = side0[rng() % side0.size()];
        do inst.terminals.s2 = side0[rng() % side0.size()];
        while (inst.terminals.s2 == inst.terminals.s1);
        inst.terminals.t1 = side1[rng() % side1.size()];
        do inst.terminals.t2 = side1[rng() % side1.size()];
        while (inst.terminals.t2 == inst.terminals.t1);
        out.push_back(std::move(inst));
    }
    return out;
}

int cmd_sweep(const std::string& scope, unsigned long long seed, int count, int workers) {
    std::vector<Instance> instances;
    int n = 0;
    if (scope == "bh2-all") {
        n = 2;
        instances = gen_bh2_all();
    } else if (scope == "bh3-random") {
        n = 3;
        instances = gen_random(3, count > 0 ? count : 10000, seed);
    } else if (scope == "bh4-random") {
        n = 4;
        instances = gen_random(4, count > 0 ? count : 200, seed);
    } else {
        throw ParseFail{"unknown sweep scope " + scope +
                        " (expected bh2-all, bh3-random or bh4-random)"};
    }
    const int total = static_cast<int>(instances.size());

    json header;
    header["scope"] = scope;
    header["generator"] = "mt19937_64";
    header["seed"] = seed;
    header["count"] = total;
    header["order"] = n;
    header["fault_budget"] = 2 * n - 3;
    std::cout << header.dump() << "\n";

    if (workers < 1) workers = 1;
    std::vector<std::string> lines(total);
    std::atomic<int> next{0};
    std::atomic<int> fails{0};
    const auto t0 = std::chrono::steady_clock::now();
    auto run = [&]() {
        for (int i; (i = next.fetch_add(1)) < total;) {
            const Instance& inst = instances[i];
            json rec;
            rec["index"] = i;
            rec["instance"] = instance_json(inst);
            try {
                const CasePlan plan = explain(inst);
                const Dpc2 d = solve(inst);
                const std::vector<std::string> bad = verify_dpc(inst, d);
                if (bad.empty()) {
                    rec["status"] = "solved";
                    rec["layout"] = plan.tag;
                } else {
                    rec["status"] = "failed";
                    rec["violations"] = bad;
                    fails.fetch_add(1);
                }
            } catch (const std::exception& e) {
                rec["status"] = "error";
                rec["reason"] = e.what();
                fails.fetch_add(1);
            }
            lines[i] = rec.dump();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; w++) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();

    for (const std::string& l : lines) std::cout << l << "\n";
    std::fprintf(stderr, "sweep %s: %d instances, %d failures, %lld ms, %d workers\n",
                 scope.c_str(), total, fails.load(), static_cast<long long>(millis),
                 workers);
    return fails.load() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paired two-disjoint path covers of the balanced hypercube"};
    app.require_subcommand(1);

    std::string inst_file, result_file, scope, s1s, ws, t1s, t2s;
    bool trace = false, fallback = false;
    long long budget = -1;
    unsigned long long seed = 1;
    int count = 0, n = 0;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    auto* solve_cmd = app.add_subcommand("solve", "construct a cover for an instance file");
    solve_cmd->add_option("instance", inst_file, "instance JSON file")->required();
    solve_cmd->add_flag("--trace", trace, "embed the construction plan");
    solve_cmd->add_flag("--oracle-fallback", fallback,
                        "on internal error, cross-check with the exhaustive search (n <= 3)");

    auto* verify_cmd = app.add_subcommand("verify", "check a result file against an instance");
    verify_cmd->add_option("instance", inst_file, "instance JSON file")->required();
    verify_cmd->add_option("result", result_file, "result JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for small orders");
    oracle_cmd->add_option("instance", inst_file, "instance JSON file")->required();
    oracle_cmd->add_option("--budget", budget, "node-expansion budget (-1 = default)");

    auto* sweep_cmd = app.add_subcommand("sweep", "solve+verify a batch, JSON lines out");
    sweep_cmd->add_option("scope", scope, "bh2-all | bh3-random | bh4-random")->required();
    sweep_cmd->add_option("--seed", seed, "random seed (default 1)");
    sweep_cmd->add_option("--count", count, "instance count for random scopes");
    sweep_cmd->add_option("--workers", workers, "worker threads");

    auto* cx_cmd =
        app.add_subcommand("counterexample", "emit the blocking instance one fault past budget");
    cx_cmd->add_option("--n", n, "order")->required();
    cx_cmd->add_option("--s1", s1s, "source, comma-separated coordinates")->required();
    cx_cmd->add_option("--w", ws, "blocked neighbor of s1")->required();
    cx_cmd->add_option("--t1", t1s, "first sink")->required();
    cx_cmd->add_option("--t2", t2s, "second sink")->required();

    auto* export_cmd = app.add_subcommand("export", "DOT graph of the hypercube");
    export_cmd->add_option("--n", n, "order (when no instance file)");
    export_cmd->add_option("--instance", inst_file, "instance JSON file (faults dashed)");
    export_cmd->add_option("--result", result_file, "result JSON file (paths styled)");

    auto* info_cmd = app.add_subcommand("info", "tool and graph facts");
    info_cmd->add_option("--n", n, "order to describe");

    try {
        app.parse(argc, argv);
        if (solve_cmd->parsed()) return cmd_solve(inst_file, trace, fallback);
        if (verify_cmd->parsed()) return cmd_verify(inst_file, result_file);
        if (oracle_cmd->parsed()) return cmd_oracle(inst_file, budget);
        if (sweep_cmd->parsed()) return cmd_sweep(scope, seed, count, workers);
        if (cx_cmd->parsed()) return cmd_counterexample(n, s1s, ws, t1s, t2s);
        if (export_cmd->parsed()) return cmd_export(n, inst_file, result_file);
        if (info_cmd->parsed()) return cmd_info(n);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseFail& e) {
        std::fprintf(stderr, "error: %s\n", e.msg.c_str());
        return 2;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
