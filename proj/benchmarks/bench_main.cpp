// Microbenchmarks for the hot paths: index queries at several reach bounds,
// the hop-relaxed and arbitrary-k variants, the per-query BFS baseline they
// are meant to beat, index construction, and (de)serialization.
//
// Sizes are chosen so the full suite runs in a couple of minutes on one core.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/hk.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/multik.hpp"
#include "kreach/oracle.hpp"
#include "kreach/persist.hpp"
#include "kreach/query.hpp"
#include "kreach/synthetic.hpp"

using namespace kreach;

namespace {

constexpr std::uint32_t kQueryN = 20'000;
constexpr std::uint64_t kQueryM = 120'000;
constexpr std::uint32_t kBuildN = 5'000;
constexpr std::uint64_t kBuildM = 30'000;

const Graph& query_graph() {
    static Graph g = power_law_digraph(kQueryN, kQueryM, 2.0, 1);
    return g;
}

const Cover& query_cover() {
    static Cover c = approx_vertex_cover(query_graph(), CoverStrategy::degree_prioritized, 1);
    return c;
}

const KReachIndex& plain_index(std::uint32_t k) {
    static std::map<std::uint32_t, KReachIndex> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_kreach(query_graph(), k, query_cover())).first;
    return it->second;
}

const std::vector<std::pair<VertexId, VertexId>>& query_pairs() {
    static std::vector<std::pair<VertexId, VertexId>> pairs = [] {
        std::mt19937_64 rng(99);
        std::vector<std::pair<VertexId, VertexId>> p(1 << 14);
        for (auto& [s, t] : p) {
            s = static_cast<VertexId>(rng() % kQueryN);
            t = static_cast<VertexId>(rng() % kQueryN);
        }
        return p;
    }();
    return pairs;
}

const Graph& build_graph() {
    static Graph g = power_law_digraph(kBuildN, kBuildM, 2.0, 2);
    return g;
}

const Cover& build_cover() {
    static Cover c = approx_vertex_cover(build_graph(), CoverStrategy::degree_prioritized, 2);
    return c;
}

void BM_plain_query(benchmark::State& state) {
    std::uint32_t k = state.range(0) == 0 ? kQueryN : static_cast<std::uint32_t>(state.range(0));
    const Graph& g = query_graph();
    const KReachIndex& idx = plain_index(k);
    const auto& pairs = query_pairs();
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [s, t] = pairs[i++ & (pairs.size() - 1)];
        benchmark::DoNotOptimize(query(g, idx, s, t).reachable);
    }
    state.SetLabel("k=" + std::to_string(k) + " cover=" + std::to_string(query_cover().size()));
}
BENCHMARK(BM_plain_query)->Arg(2)->Arg(4)->Arg(16)->Arg(0);

void BM_hk_query(benchmark::State& state) {
    const Graph& g = query_graph();
    static Cover cover2 = approx_h_hop_cover(g, 2, CoverStrategy::degree_prioritized, 1);
    static HKReachIndex idx = build_hk(g, 2, 6, cover2);
    HkQuerier ask(g, idx);
    const auto& pairs = query_pairs();
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [s, t] = pairs[i++ & (pairs.size() - 1)];
        benchmark::DoNotOptimize(ask(s, t).reachable);
    }
    state.SetLabel("h=2 k=6 cover=" + std::to_string(cover2.size()));
}
BENCHMARK(BM_hk_query);

void BM_general_query(benchmark::State& state) {
    const Graph& g = query_graph();
    static MultiKIndex family =
        build_family(g, FamilyMode::geometric, CoverStrategy::degree_prioritized, 1);
    std::uint32_t k = static_cast<std::uint32_t>(state.range(0));
    const auto& pairs = query_pairs();
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [s, t] = pairs[i++ & (pairs.size() - 1)];
        benchmark::DoNotOptimize(query_general(family, g, s, t, k).verdict);
    }
    state.SetLabel("members=" + std::to_string(family.size()));
}
BENCHMARK(BM_general_query)->Arg(3)->Arg(8);

void BM_bfs_baseline(benchmark::State& state) {
    const Graph& g = query_graph();
    std::uint32_t k = static_cast<std::uint32_t>(state.range(0));
    BoundedBfs bfs(g.num_vertices());
    const auto& pairs = query_pairs();
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [s, t] = pairs[i++ & (pairs.size() - 1)];
        benchmark::DoNotOptimize(bfs.run_to_target(g, s, t, k, Direction::forward));
    }
}
BENCHMARK(BM_bfs_baseline)->Arg(4);

void BM_build_plain(benchmark::State& state) {
    std::uint32_t k = static_cast<std::uint32_t>(state.range(0));
    const Graph& g = build_graph();
    const Cover& c = build_cover();
    for (auto _ : state) {
        KReachIndex idx = build_kreach(g, k, c);
        benchmark::DoNotOptimize(idx.edge_count());
    }
    state.SetLabel("n=" + std::to_string(kBuildN) + " cover=" + std::to_string(build_cover().size()));
}
BENCHMARK(BM_build_plain)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_build_hk(benchmark::State& state) {
    const Graph& g = build_graph();
    static Cover cover2 = approx_h_hop_cover(g, 2, CoverStrategy::degree_prioritized, 2);
    for (auto _ : state) {
        HKReachIndex idx = build_hk(g, 2, 6, cover2);
        benchmark::DoNotOptimize(idx.edge_count());
    }
    state.SetLabel("h=2 k=6 cover=" + std::to_string(cover2.size()));
}
BENCHMARK(BM_build_hk)->Unit(benchmark::kMillisecond);

void BM_save_load(benchmark::State& state) {
    const KReachIndex& idx = plain_index(4);
    for (auto _ : state) {
        std::ostringstream out(std::ios::binary);
        save_index(idx, out);
        std::istringstream in(std::move(out).str());
        AnyIndex back = load_index(in);
        benchmark::DoNotOptimize(index_edge_count(back));
    }
    state.SetLabel("edges=" + std::to_string(plain_index(4).edge_count()));
}
BENCHMARK(BM_save_load)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
