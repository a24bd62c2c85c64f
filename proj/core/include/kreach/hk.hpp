#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/query.hpp"
#include "kreach/weighted_adjacency.hpp"

namespace kreach {

// (h, k) index: like the k-reach index but over an h-hop cover, so the graph
// hops needed to enter/leave the cover can reach h on each side. Edge weights
// are max(k-2h, dist) stored as the offset k - weight in [0, 2h] (one byte in
// memory). Requires k > 2h. With h = 1 this is exactly the k-reach index
// modulo weight encoding.
class HKReachIndex {
public:
    HKReachIndex() = default;

    static HKReachIndex from_parts(std::uint32_t h, std::uint32_t k, Cover cover,
                                   WeightedAdjacency adj, GraphFingerprint fp,
                                   BuildStats stats = {});

    std::uint32_t h() const noexcept { return h_; }
    std::uint32_t k() const noexcept { return k_; }
    const Cover& cover() const noexcept { return cover_; }
    const WeightedAdjacency& adj() const noexcept { return adj_; }
    const WeightedAdjacency& radj() const noexcept { return radj_; }
    const GraphFingerprint& fingerprint() const noexcept { return fp_; }
    const BuildStats& build_stats() const noexcept { return stats_; }
    std::uint64_t edge_count() const noexcept { return adj_.edge_count(); }

    std::optional<std::uint8_t> edge_offset(VertexId u, VertexId v) const {
        std::uint32_t row = cover_.rank_of(u);
        if (row == cover_.size()) return std::nullopt;
        return adj_.find(row, v);
    }

    std::uint32_t decode_weight(std::uint8_t offset) const { return k_ - offset; }

    friend bool operator==(const HKReachIndex& a, const HKReachIndex& b) {
        return a.h_ == b.h_ && a.k_ == b.k_ && a.cover_ == b.cover_ && a.adj_ == b.adj_ &&
               a.fp_ == b.fp_;
    }

private:
    std::uint32_t h_ = 0;
    std::uint32_t k_ = 0;
    Cover cover_;
    WeightedAdjacency adj_;
    WeightedAdjacency radj_;
    GraphFingerprint fp_;
    BuildStats stats_;
};

// One bounded BFS per cover member. Requires k > 2h, h >= 1, an h-hop cover
// sized to g, and cover validity.
HKReachIndex build_hk(const Graph& g, std::uint32_t h, std::uint32_t k, const Cover& cover,
                      unsigned threads = 0);

// Query engine holding reusable BFS scratch: answers "s reaches t within k
// hops" exactly. Queries walk at most h graph hops on each side to reach the
// cover; a forward pre-check of depth min(k, h-1) (h >= 2 only) catches short
// paths that can avoid an h-hop cover entirely.
class HkQuerier {
public:
    HkQuerier(const Graph& g, const HKReachIndex& idx);

    QueryAnswer operator()(VertexId s, VertexId t);

private:
    const Graph& g_;
    const HKReachIndex& idx_;
    BoundedBfs fwd_;
    BoundedBfs bwd_;
    std::vector<std::pair<VertexId, std::uint32_t>> fwd_cover_;
    std::vector<std::pair<VertexId, std::uint32_t>> bwd_cover_;
};

// One-shot convenience wrapper over HkQuerier.
QueryAnswer query_hk(const Graph& g, const HKReachIndex& idx, VertexId s, VertexId t);

} // namespace kreach
