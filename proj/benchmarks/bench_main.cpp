// Benchmarks for the hot paths: LLT polynomials through both routes, the two
// cumulant evaluations, spanning-tree enumeration, and the full theorem check.
// The argument is the vertex count; lollipops use l = size - 2, m = 2, k = 1.

#include <benchmark/benchmark.h>

#include <lltlab/cumulant.hpp>
#include <lltlab/lltgraph.hpp>
#include <lltlab/shapes.hpp>
#include <lltlab/sympoly.hpp>
#include <lltlab/theorem.hpp>
#include <lltlab/treebij.hpp>

namespace {

using namespace lltlab;

MeltingLollipop lollipop(int size) { return MeltingLollipop(size - 2, 2, 1); }

LLTGraph clique(int n) {
    std::vector<std::pair<int, int>> ed;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) ed.emplace_back(u, v);
    return LLTGraph(n, {}, {}, std::move(ed));
}

void BM_LltOfGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LLTGraph g = melting_lollipop_graph(lollipop(n));
    for (auto _ : state) {
        SymPoly p = llt_of_graph(g, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LltOfGraph)->DenseRange(4, 7);

void BM_LltOfShapes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ShapeSequence seq = melting_lollipop_shapes(lollipop(n));
    for (auto _ : state) {
        SymPoly p = llt_of_shapes(seq, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LltOfShapes)->DenseRange(4, 7);

void BM_CumulantClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LLTGraph g = clique(n);
    for (auto _ : state) {
        SymPoly p = cumulant_of_graph(g, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_CumulantClosedForm)->DenseRange(3, 6);

void BM_CumulantRecursive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LLTGraph g = clique(n);
    for (auto _ : state) {
        SymPoly p = cumulant_of_graph_recursive(g, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_CumulantRecursive)->DenseRange(3, 6);

void BM_SpanningTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SimpleGraph g = underlying_simple_graph(clique(n));
    for (auto _ : state) {
        long count = 0;
        spanning_trees(g, [&](const LabeledTree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SpanningTrees)->DenseRange(4, 7);

void BM_ToSchurBasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SymPoly p = llt_of_graph(melting_lollipop_graph(lollipop(n)), n);
    for (auto _ : state) {
        auto terms = to_schur_basis(p);
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_ToSchurBasis)->DenseRange(4, 7);

void BM_VerifyTheorem(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MeltingLollipop p = lollipop(n);
    for (auto _ : state) {
        VerificationReport r = verify_theorem_1_2(p, n);
        benchmark::DoNotOptimize(r.holds);
    }
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(4, 6);

}  // namespace

BENCHMARK_MAIN();
