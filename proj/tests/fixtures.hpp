#pragma once

// Shared test fixtures: small named graphs plus naive reference algorithms
// that are deliberately independent from the library implementations
// (different containers, different traversal code) so they can serve as
// ground truth.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "kreach/graph.hpp"

namespace fixtures {

using kreach::Direction;
using kreach::Graph;
using kreach::VertexId;

// 10-vertex digraph exercising every query-resolution case. Shape:
//
//   0 -> 1 <- 2        1 -> 3 -> {4, 5}        4 -> 6 -> {7, 8}       8 -> 9
//
// {1, 3, 6, 8} is a minimum 1-hop vertex cover; {3, 4, 6} is a 2-hop cover.
inline Graph demo_graph() {
    return Graph::from_edges(
        10, {{0, 1}, {2, 1}, {1, 3}, {3, 4}, {3, 5}, {4, 6}, {6, 7}, {6, 8}, {8, 9}});
}

inline Graph path_graph(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

// 0 -> 1, 0 -> 2, ..., 0 -> n-1.
inline Graph out_star(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, std::move(edges));
}

// Reference BFS using node-keyed maps and a plain queue.
inline std::map<VertexId, std::uint32_t> naive_bfs(const Graph& g, VertexId src, std::uint32_t k,
                                                   Direction dir) {
    std::map<VertexId, std::uint32_t> dist{{src, 0}};
    std::queue<VertexId> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
        VertexId u = frontier.front();
        frontier.pop();
        std::uint32_t du = dist.at(u);
        if (du >= k) continue;
        for (VertexId v : g.neighbors(u, dir)) {
            if (dist.emplace(v, du + 1).second) frontier.push(v);
        }
    }
    return dist;
}

inline std::uint32_t naive_dist(const Graph& g, VertexId s, VertexId t) {
    auto d = naive_bfs(g, s, g.num_vertices(), Direction::forward);
    auto it = d.find(t);
    return it == d.end() ? kreach::kInfDist : it->second;
}

inline bool naive_khop(const Graph& g, VertexId s, VertexId t, std::uint32_t k) {
    auto d = naive_bfs(g, s, k, Direction::forward);
    auto it = d.find(t);
    return it != d.end() && it->second <= k;
}

namespace detail {
inline bool extend_uncovered(const Graph& g, const std::set<VertexId>& members,
                             std::vector<bool>& on_path, VertexId u, std::uint32_t left) {
    if (left == 0) return true;
    for (VertexId v : g.out_neighbors(u)) {
        if (members.count(v) || on_path[v]) continue;
        on_path[v] = true;
        if (extend_uncovered(g, members, on_path, v, left - 1)) return true;
        on_path[v] = false;
    }
    return false;
}
} // namespace detail

// True iff some simple directed path of exactly h edges avoids `members`
// completely — i.e. `members` is NOT a valid h-hop cover.
inline bool naive_uncovered_path_exists(const Graph& g, std::uint32_t h,
                                        const std::set<VertexId>& members) {
    std::vector<bool> on_path(g.num_vertices(), false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (members.count(s)) continue;
        on_path[s] = true;
        bool found = detail::extend_uncovered(g, members, on_path, s, h);
        on_path[s] = false;
        if (found) return true;
    }
    return false;
}

} // namespace fixtures
