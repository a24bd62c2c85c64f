#include "kreach/stats.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace kreach {

namespace {

// Accumulates finite distances (t != s) as a histogram indexed by length;
// shortest paths are < n so the histogram has n bins.
struct DistanceTally {
    std::vector<std::uint64_t> bins;
    std::uint64_t total = 0;

    explicit DistanceTally(std::uint32_t n) : bins(n > 0 ? n : 1, 0) {}

    void add(std::uint32_t d) {
        bins[d]++;
        ++total;
    }

    std::uint32_t max_nonzero() const {
        for (std::uint32_t d = static_cast<std::uint32_t>(bins.size()); d-- > 1;)
            if (bins[d] > 0) return d;
        return 0;
    }

    // Upper median: 0-based element total/2 of the sorted multiset.
    std::uint32_t median() const {
        if (total == 0) return 0;
        std::uint64_t target = total / 2;
        std::uint64_t seen = 0;
        for (std::uint32_t d = 1; d < bins.size(); ++d) {
            seen += bins[d];
            if (seen > target) return d;
        }
        return 0;
    }
};

GraphStats stats_from_sources(const Graph& g, const std::vector<VertexId>& sources,
                              bool estimated) {
    GraphStats s;
    s.n = g.num_vertices();
    s.m = g.num_edges();
    s.estimated = estimated;
    for (VertexId v = 0; v < g.num_vertices(); ++v) s.deg_max = std::max(s.deg_max, g.degree(v));

    std::uint32_t n = g.num_vertices();
    if (n == 0) return s;
    DistanceTally tally(n);
    BoundedBfs bfs(n);
    for (VertexId src : sources) {
        for (VertexId v : bfs.run(g, src, n, Direction::forward))
            if (v != src) tally.add(bfs.dist(v));
    }
    s.diameter = tally.max_nonzero();
    s.median_sp = tally.median();
    return s;
}

} // namespace

GraphStats graph_stats(const Graph& g) {
    std::vector<VertexId> sources(g.num_vertices());
    std::iota(sources.begin(), sources.end(), 0);
    return stats_from_sources(g, sources, false);
}

GraphStats graph_stats_sampled(const Graph& g, std::uint64_t seed, std::uint32_t samples) {
    std::uint32_t n = g.num_vertices();
    std::vector<VertexId> sources(n);
    std::iota(sources.begin(), sources.end(), 0);
    if (samples < n) {
        std::mt19937_64 rng(seed);
        std::shuffle(sources.begin(), sources.end(), rng);
        sources.resize(samples);
        std::sort(sources.begin(), sources.end());
    }
    return stats_from_sources(g, sources, samples < n);
}

} // namespace kreach
