// Micro benchmarks for the hot paths: cycle enumeration, CNF encoding, the
// SAT core, exhaustive verification, reduction construction, and canonical
// forms. Sizes are chosen so a full run stays under a minute on one core.

#include <benchmark/benchmark.h>

#include <random>

#include "naecol/canon.hpp"
#include "naecol/formula.hpp"
#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"
#include "naecol/reduction.hpp"
#include "naecol/search.hpp"
#include "naecol/solver.hpp"

namespace {

using namespace naecol;

Graph random_graph(int n, int percent, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
        }
    }
    return g;
}

void BM_EnumerateCycles_TreeK4(benchmark::State& state) {
    const Graph graph = build_tree_gadget(4).gadget.graph;  // 62 vertices, 995 4-cycles
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_k_cycles(graph, 4));
    }
}
BENCHMARK(BM_EnumerateCycles_TreeK4);

void BM_EnumerateCycles_Dense(benchmark::State& state) {
    const Graph graph = random_graph(16, 80, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_k_cycles(graph, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_EnumerateCycles_Dense)->Arg(4)->Arg(5)->Arg(6);

void BM_EncodeCycles_TreeK5(benchmark::State& state) {
    const Graph graph = build_tree_gadget(5).gadget.graph;  // 66552 5-cycles
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_nae_cycles(graph, 5));
    }
}
BENCHMARK(BM_EncodeCycles_TreeK5);

void BM_SatSolve_Ring(benchmark::State& state) {
    const Gadget ring = k4_loop(static_cast<int>(state.range(0)));
    const CnfEncoding encoding = encode_nae_cycles(ring.graph, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sat_solve(encoding));
    }
}
BENCHMARK(BM_SatSolve_Ring)->Arg(9)->Arg(25)->Arg(101);

void BM_SatSolve_TreeK4(benchmark::State& state) {
    const Graph graph = build_tree_gadget(4).gadget.graph;
    const CnfEncoding encoding = encode_nae_cycles(graph, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sat_solve(encoding));
    }
}
BENCHMARK(BM_SatSolve_TreeK4);

void BM_ForcingCheck_TreeK4(benchmark::State& state) {
    const TreeGadget tree = build_tree_gadget(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            check_forcing(tree.gadget.graph, 4, tree.gadget.x, tree.gadget.y));
    }
}
BENCHMARK(BM_ForcingCheck_TreeK4);

void BM_ExhaustiveVerify_Ring(benchmark::State& state) {
    const Gadget ring = k4_loop(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_super_edge(ring, VerifyMethod::Exhaustive));
    }
}
BENCHMARK(BM_ExhaustiveVerify_Ring)->Arg(5)->Arg(7)->Arg(9);

void BM_Reduce(benchmark::State& state) {
    const Formula formula = random_formula(6, 4, static_cast<int>(state.range(0)), 7);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(formula, k));
    }
}
BENCHMARK(BM_Reduce)->Arg(3)->Arg(4);

void BM_ReduceNecklace(benchmark::State& state) {
    const Formula formula = random_formula(6, 4, 3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_necklace(formula));
    }
}
BENCHMARK(BM_ReduceNecklace);

void BM_CanonicalForm(benchmark::State& state) {
    const Graph graph = random_graph(static_cast<int>(state.range(0)), 50, 3);
    const uint64_t bits = adjacency_bits(graph);
    const int n = graph.num_vertices();
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form_bits(bits, n));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10);

void BM_CanonicalCensus(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_canonical_graphs(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CanonicalCensus)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
