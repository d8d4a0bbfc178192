// Serial reference against the OpenMP path for the kernels and the two graph solvers.
// Arg(0) is the serial path; Arg(n > 0) runs the parallel path with n threads.

#include "citerank/kernels.hpp"
#include "citerank/ranking.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace citerank;

namespace {

kernels::Execution mode(std::int64_t arg) {
    return arg == 0 ? kernels::Execution::serial()
                    : kernels::Execution::with_threads(static_cast<int>(arg));
}

kernels::CsrMatrix random_csr(std::size_t n, std::size_t per_row) {
    std::mt19937_64 rng(7);
    kernels::CsrMatrix m;
    m.rows = m.columns = n;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < per_row; ++k) {
            m.cols.push_back(static_cast<std::uint32_t>(rng() % n));
            m.values.push_back(1.0 / static_cast<double>(per_row));
        }
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

// Preferential-attachment style citation graph: later nodes cite earlier ones.
const CitationGraph& citation_graph() {
    static const CitationGraph g = [] {
        std::mt19937_64 rng(11);
        std::vector<Edge> edges;
        std::vector<std::size_t> targets{0};
        const std::size_t n = 100000;
        for (std::size_t v = 1; v < n; ++v) {
            for (int k = 0; k < 8; ++k) {
                const auto u = targets[rng() % targets.size()];
                if (u != v) {
                    edges.push_back({"n" + std::to_string(v), "n" + std::to_string(u)});
                    targets.push_back(u);
                }
            }
            targets.push_back(v);
        }
        return build_graph(edges);
    }();
    return g;
}

void BM_Multiply(benchmark::State& state) {
    const auto m = random_csr(1 << 18, 10);
    std::vector<double> x(m.columns, 1.0), y(m.rows);
    for (auto _ : state) {
        kernels::multiply(m, x, y, mode(state.range(0)));
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m.nonzeros()));
}

void BM_L1Distance(benchmark::State& state) {
    std::vector<double> a(1 << 22, 0.5), b(1 << 22, 0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::l1_distance(a, b, mode(state.range(0))));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * 2 * a.size() * sizeof(double)));
}

void BM_PageRank(benchmark::State& state) {
    const auto& g = citation_graph();
    PageRankParams p;
    p.execution = mode(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pagerank(g, p).status.iterations);
    }
}

void BM_Hits(benchmark::State& state) {
    const auto& g = citation_graph();
    HitsParams p;
    p.tol = 1e-8;
    p.execution = mode(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hits(g, p).status.iterations);
    }
}

} // namespace

BENCHMARK(BM_Multiply)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_L1Distance)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRank)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hits)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
