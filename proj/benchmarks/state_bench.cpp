#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "kplex/gen.hpp"
#include "kplex/rand_util.hpp"
#include "kplex/state.hpp"

using namespace kplex;

namespace {

const Graph& keller_graph() {
    static const Graph g = gen::keller4();
    return g;
}

}  // namespace

static void BM_InsertRemovePair(benchmark::State& state) {
    const Graph& g = keller_graph();
    KPlexState st(g, 2, 1);
    std::mt19937_64 rng(7);
    std::vector<Vertex> members{0};
    st.insert(0);
    for (auto _ : state) {
        const Vertex v = static_cast<Vertex>(uniform_index(rng, g.num_vertices()));
        if (st.contains(v)) {
            if (st.size() > 1) st.remove(v);
        } else if (st.classify_vertex(v) == MoveClass::kAdd) {
            st.insert(v);
        }
        benchmark::DoNotOptimize(st.hash());
    }
}
BENCHMARK(BM_InsertRemovePair);

static void BM_ClassifyOutside(benchmark::State& state) {
    const Graph& g = keller_graph();
    std::mt19937_64 rng(11);
    KPlexState st(g, 2, 3);
    // grow some solution to classify against
    st.insert(0);
    for (int t = 0; t < 200; ++t) {
        const Vertex v = static_cast<Vertex>(uniform_index(rng, g.num_vertices()));
        if (!st.contains(v) && st.classify_vertex(v) == MoveClass::kAdd) st.insert(v);
    }
    NeighborhoodSets sets;
    for (auto _ : state) {
        st.classify(sets);
        benchmark::DoNotOptimize(sets.add.size());
    }
}
BENCHMARK(BM_ClassifyOutside);

static void BM_ForceSimulation(benchmark::State& state) {
    const Graph& g = keller_graph();
    std::mt19937_64 rng(13);
    KPlexState st(g, 2, 5);
    st.insert(0);
    for (int t = 0; t < 400; ++t) {
        const Vertex v = static_cast<Vertex>(uniform_index(rng, g.num_vertices()));
        if (!st.contains(v) && st.classify_vertex(v) == MoveClass::kAdd) st.insert(v);
    }
    std::vector<std::uint32_t> prio(g.num_vertices());
    std::iota(prio.begin(), prio.end(), 0u);
    NeighborhoodSets sets;
    st.classify(sets);
    for (auto _ : state) {
        for (Vertex v : sets.force) {
            benchmark::DoNotOptimize(st.force_removal_count(v, prio, nullptr, 4));
        }
    }
}
BENCHMARK(BM_ForceSimulation);
