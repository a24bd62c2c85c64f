#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"

namespace kreach {

// CSR adjacency over cover ranks with one small weight byte per edge. Rows are
// indexed by cover rank; targets are vertex ids in strictly ascending order.
// The meaning of the weight byte belongs to the owning index type.
struct WeightedAdjacency {
    std::vector<std::uint64_t> offsets{0}; // rows + 1
    std::vector<VertexId> targets;
    std::vector<std::uint8_t> weights;

    std::size_t rows() const noexcept { return offsets.size() - 1; }
    std::uint64_t edge_count() const noexcept { return targets.size(); }

    std::span<const VertexId> row_targets(std::uint32_t row) const {
        return {targets.data() + offsets[row], targets.data() + offsets[row + 1]};
    }
    std::span<const std::uint8_t> row_weights(std::uint32_t row) const {
        return {weights.data() + offsets[row], weights.data() + offsets[row + 1]};
    }

    // Weight of edge (row, v) if present; binary search over the row.
    std::optional<std::uint8_t> find(std::uint32_t row, VertexId v) const;

    // Adjacency with every edge reversed, same weights. Row r of the result
    // lists the sources of edges into cover member r.
    WeightedAdjacency transposed(const Cover& cover) const;

    friend bool operator==(const WeightedAdjacency&, const WeightedAdjacency&) = default;
};

} // namespace kreach
