#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bhdpc/basecase.hpp"
#include "bhdpc/constructor.hpp"
#include "bhdpc/hampath.hpp"
#include "bhdpc/oracle.hpp"
#include "bhdpc/topology.hpp"

using namespace bhdpc;

namespace {

std::vector<Edge> edge_pool(int n) {
    const BhGraph& g = BhGraph::get(n);
    std::vector<Edge> out;
    for (VertexId v = 0; v < g.nv(); v++)
        for (VertexId w : g.adj(v))
            if (v < w) out.push_back(Edge(g.vertex(v), g.vertex(w)));
    return out;
}

Instance sample_instance(std::mt19937_64& rng, int n, int max_faults) {
    static thread_local std::vector<Edge> pool;
    static thread_local int pool_n = 0;
    if (pool_n != n) {
        pool = edge_pool(n);
        pool_n = n;
    }
    std::vector<Vertex> side0, side1;
    for (VertexId id = 0; id < num_vertices(n); id++) {
        Vertex v = vertex_of(id, n);
        (v.side() == 0 ? side0 : side1).push_back(v);
    }
    Instance inst;
    inst.n = n;
    while (static_cast<int>(inst.faults.size()) < max_faults)
        inst.faults.insert(pool[rng() % pool.size()]);
    inst.terminals.s1 = side0[rng() % side0.size()];
    do inst.terminals.s2 = side0[rng() % side0.size()];
    while (inst.terminals.s2 == inst.terminals.s1);
    inst.terminals.t1 = side1[rng() % side1.size()];
    do inst.terminals.t2 = side1[rng() % side1.size()];
    while (inst.terminals.t2 == inst.terminals.t1);
    return inst;
}

void BM_Neighbors(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Vertex v = vertex_of(num_vertices(n) / 3, n);
    for (auto _ : state) benchmark::DoNotOptimize(neighbors(v, n));
}
BENCHMARK(BM_Neighbors)->Arg(2)->Arg(3)->Arg(4);

void BM_DimensionExchange(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SubcubeSplit sp = split(n, 0);  // builds the exchange map
        benchmark::DoNotOptimize(sp.parts[0].size());
    }
}
BENCHMARK(BM_DimensionExchange)->Arg(3)->Arg(4);

void BM_HamPath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(42);
    HamQuery q;
    q.n = n;
    q.x = vertex_of(0, n);
    q.y = vertex_of(1, n);
    const std::vector<Edge> pool = edge_pool(n);
    for (int j = 0; j < 2 * n - 3; j++) q.faults.insert(pool[rng() % pool.size()]);
    for (auto _ : state) {
        HamResult r = ham_path(q);
        benchmark::DoNotOptimize(r.found());
    }
}
BENCHMARK(BM_HamPath)->Arg(2)->Arg(3);

void BM_SolveBase(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Instance> insts;
    for (int i = 0; i < 64; i++) insts.push_back(sample_instance(rng, 2, 1));
    size_t i = 0;
    for (auto _ : state) {
        const Instance& inst = insts[i++ % insts.size()];
        benchmark::DoNotOptimize(solve_bh2(inst.faults, inst.terminals).solved);
    }
}
BENCHMARK(BM_SolveBase);

void BM_Solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<Instance> insts;
    for (int i = 0; i < 32; i++) insts.push_back(sample_instance(rng, n, 2 * n - 3));
    size_t i = 0;
    for (auto _ : state) {
        const Instance& inst = insts[i++ % insts.size()];
        benchmark::DoNotOptimize(solve(inst).p1.vertices.size());
    }
}
BENCHMARK(BM_Solve)->Arg(3)->Arg(4);

void BM_OracleSearch(benchmark::State& state) {
    std::mt19937_64 rng(9);
    std::vector<Instance> insts;
    for (int i = 0; i < 16; i++) insts.push_back(sample_instance(rng, 2, 1));
    size_t i = 0;
    for (auto _ : state) {
        const Instance& inst = insts[i++ % insts.size()];
        benchmark::DoNotOptimize(brute_force_dpc(inst).exists());
    }
}
BENCHMARK(BM_OracleSearch);

}  // namespace

BENCHMARK_MAIN();
