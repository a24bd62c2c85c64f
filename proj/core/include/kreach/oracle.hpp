#pragma once

#include <cstdint>
#include <vector>

#include "kreach/graph.hpp"

namespace kreach {

// Dense n x n matrix of shortest-path distances truncated at a bound k:
// entries above the bound are kInfDist, the diagonal is 0.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::uint32_t n, std::uint32_t fill)
        : n_(n), d_(static_cast<std::size_t>(n) * n, fill) {}

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t at(VertexId s, VertexId t) const {
        return d_[static_cast<std::size_t>(s) * n_ + t];
    }
    void set(VertexId s, VertexId t, std::uint32_t dist) {
        d_[static_cast<std::size_t>(s) * n_ + t] = dist;
    }

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

// Reference answer for "can s reach t in at most k hops": plain BFS with
// early exit, no index involved.
bool oracle_khop(const Graph& g, VertexId s, VertexId t, std::uint32_t k);

// One bounded BFS per source. Guarded to n <= 500 to keep the dense matrix
// honest about its O(n^2) cost.
DistanceMatrix all_pairs_bounded(const Graph& g, std::uint32_t k);

} // namespace kreach
