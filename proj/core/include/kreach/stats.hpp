#pragma once

#include <cstdint>

#include "kreach/graph.hpp"

namespace kreach {

// Summary statistics of a graph.
//
// `diameter` is the maximum finite shortest-path length over ordered pairs
// (s, t), s != t; `median_sp` is the median of that multiset, taking the upper
// middle element for even counts. Both are 0 when no finite pair exists.
// `estimated` marks values derived from a BFS sample rather than all sources.
struct GraphStats {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t deg_max = 0;
    std::uint32_t diameter = 0;
    std::uint32_t median_sp = 0;
    bool estimated = false;
};

// Exact statistics via one BFS per vertex: O(n(n+m)). Intended for n up to
// roughly 10^4; use graph_stats_sampled beyond that.
GraphStats graph_stats(const Graph& g);

// Estimates diameter/median from BFS runs out of `samples` seeded random
// source vertices. deg_max, n, m are always exact.
GraphStats graph_stats_sampled(const Graph& g, std::uint64_t seed, std::uint32_t samples);

} // namespace kreach
