#pragma once

// Internal helper shared by the index builders: one bounded BFS per cover
// member, cover-to-cover edges collected per row and merged in rank order so
// the result is deterministic for any thread count.

#include <algorithm>
#include <thread>
#include <utility>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/weighted_adjacency.hpp"

namespace kreach::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t rows) {
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        requested = hw == 0 ? 1 : hw;
    }
    // Don't spawn threads for trivially small builds.
    std::size_t cap = rows / 64 + 1;
    return static_cast<unsigned>(std::min<std::size_t>(requested, cap));
}

template <typename WeightFn>
std::pair<WeightedAdjacency, BuildStats> build_cover_adjacency(const Graph& g, std::uint32_t bound,
                                                               const Cover& cover,
                                                               unsigned threads,
                                                               WeightFn weight_of) {
    auto members = cover.members();
    std::size_t rows = members.size();
    std::vector<std::vector<std::pair<VertexId, std::uint8_t>>> row_edges(rows);

    auto work = [&](std::size_t begin, std::size_t end) {
        BoundedBfs bfs(g.num_vertices());
        for (std::size_t r = begin; r < end; ++r) {
            VertexId u = members[r];
            auto& out = row_edges[r];
            for (VertexId v : bfs.run(g, u, bound, Direction::forward))
                if (v != u && cover.contains(v)) out.emplace_back(v, weight_of(bfs.dist(v)));
            std::sort(out.begin(), out.end());
        }
    };

    unsigned nthreads = resolve_threads(threads, rows);
    if (nthreads <= 1) {
        work(0, rows);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (rows + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::size_t begin = std::min<std::size_t>(t * chunk, rows);
            std::size_t end = std::min<std::size_t>(begin + chunk, rows);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    WeightedAdjacency adj;
    adj.offsets.assign(rows + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) adj.offsets[r + 1] = adj.offsets[r] + row_edges[r].size();
    adj.targets.reserve(adj.offsets[rows]);
    adj.weights.reserve(adj.offsets[rows]);
    for (const auto& row : row_edges)
        for (const auto& [v, w] : row) {
            adj.targets.push_back(v);
            adj.weights.push_back(w);
        }
    return {std::move(adj), BuildStats{rows}};
}

} // namespace kreach::detail
