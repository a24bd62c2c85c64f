#pragma once

#include <cstdint>
#include <optional>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/weighted_adjacency.hpp"

namespace kreach {

// Instrumentation from index construction.
struct BuildStats {
    std::uint64_t bfs_traversals = 0;

    friend bool operator==(const BuildStats&, const BuildStats&) = default;
};

// Weight code for a cover-to-cover edge at distance `dist` under bound k:
// 0 encodes any distance <= k-2, 1 encodes k-1, 2 encodes k. Distances are
// clamped below at k-2 because the four query cases never need to subtract
// more than 2 from k. Throws std::invalid_argument unless 1 <= dist <= k.
std::uint8_t weight_code_of(std::uint32_t dist, std::uint32_t k);

// k-hop reachability index: a weighted digraph over a vertex cover S with an
// edge (u, v) for every ordered cover pair within k hops, weighted by
// max(k-2, dist(u, v)) stored as a 2-valued-bit code. Self-loops are implicit
// (every cover vertex reaches itself at distance 0).
class KReachIndex {
public:
    KReachIndex() = default;

    // Reassemble from deserialized parts; the reverse adjacency is derived.
    static KReachIndex from_parts(std::uint32_t k, Cover cover, WeightedAdjacency adj,
                                  GraphFingerprint fp, BuildStats stats = {});

    std::uint32_t k() const noexcept { return k_; }
    const Cover& cover() const noexcept { return cover_; }
    const WeightedAdjacency& adj() const noexcept { return adj_; }
    const WeightedAdjacency& radj() const noexcept { return radj_; }
    const GraphFingerprint& fingerprint() const noexcept { return fp_; }
    const BuildStats& build_stats() const noexcept { return stats_; }
    std::uint64_t edge_count() const noexcept { return adj_.edge_count(); }

    // Code of index edge (u, v), if u and v are cover members joined within k
    // hops. u == v is not stored (virtual self-loop).
    std::optional<std::uint8_t> edge_code(VertexId u, VertexId v) const {
        std::uint32_t row = cover_.rank_of(u);
        if (row == cover_.size()) return std::nullopt;
        return adj_.find(row, v);
    }

    std::uint32_t decode_weight(std::uint8_t code) const { return k_ - 2 + code; }

    friend bool operator==(const KReachIndex& a, const KReachIndex& b) {
        return a.k_ == b.k_ && a.cover_ == b.cover_ && a.adj_ == b.adj_ && a.fp_ == b.fp_;
    }

private:
    std::uint32_t k_ = 0;
    Cover cover_;
    WeightedAdjacency adj_;
    WeightedAdjacency radj_;
    GraphFingerprint fp_;
    BuildStats stats_;
};

// Builds the k-reach index with one bounded BFS per cover vertex (exactly
// |cover| traversals, reported in build_stats). threads = 0 picks a sensible
// hardware default; the result is identical for any thread count.
// Requires k >= 2, a 1-hop cover sized to g, and cover validity.
KReachIndex build_kreach(const Graph& g, std::uint32_t k, const Cover& cover,
                         unsigned threads = 0);

} // namespace kreach
