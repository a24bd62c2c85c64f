#include "kreach/oracle.hpp"

#include <stdexcept>

namespace kreach {

bool oracle_khop(const Graph& g, VertexId s, VertexId t, std::uint32_t k) {
    if (s >= g.num_vertices() || t >= g.num_vertices())
        throw std::invalid_argument("oracle_khop: vertex out of range");
    BoundedBfs bfs(g.num_vertices());
    return bfs.run_to_target(g, s, t, k, Direction::forward);
}

DistanceMatrix all_pairs_bounded(const Graph& g, std::uint32_t k) {
    std::uint32_t n = g.num_vertices();
    if (n > 500) throw std::invalid_argument("all_pairs_bounded: n must be <= 500");
    DistanceMatrix m(n, kInfDist);
    BoundedBfs bfs(n);
    for (VertexId s = 0; s < n; ++s)
        for (VertexId v : bfs.run(g, s, k, Direction::forward)) m.set(s, v, bfs.dist(v));
    return m;
}

} // namespace kreach
