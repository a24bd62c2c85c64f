#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kreach/graph.hpp"

namespace kreach {

enum class CoverStrategy { random_edge, degree_prioritized };

// How a cover was produced.
enum class CoverOrigin { random_edge, degree_prioritized, path_based, exact, external };

std::string_view to_string(CoverOrigin origin);

// An h-hop vertex cover: a vertex set S such that no directed simple path of
// exactly `hop` edges avoids S entirely. Stores a membership bitmap for O(1)
// tests plus the ascending member list.
class Cover {
public:
    Cover() = default;

    // Structural construction (dedups, sorts, range-checks members). Does not
    // verify cover validity against a graph; see is_h_hop_cover.
    static Cover from_members(std::uint32_t n, std::uint32_t hop, std::vector<VertexId> members,
                              CoverOrigin origin = CoverOrigin::external);

    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(bitmap_.size()); }
    std::uint32_t hop() const noexcept { return hop_; }
    std::size_t size() const noexcept { return members_.size(); }
    CoverOrigin origin() const noexcept { return origin_; }

    bool contains(VertexId v) const { return bitmap_[v]; }
    std::span<const VertexId> members() const { return members_; }

    // Position of v in the ascending member list; size() if absent.
    std::uint32_t rank_of(VertexId v) const;

    // Same member set declared at a different hop (any i-hop cover is also a
    // j-hop cover for j >= i).
    Cover with_hop(std::uint32_t hop) const;

    friend bool operator==(const Cover& a, const Cover& b) {
        return a.hop_ == b.hop_ && a.bitmap_ == b.bitmap_ && a.members_ == b.members_;
    }

private:
    std::uint32_t hop_ = 1;
    std::vector<bool> bitmap_;
    std::vector<VertexId> members_;
    CoverOrigin origin_ = CoverOrigin::external;
};

// 2-approximate minimum vertex cover via maximal matching: scan edges in a
// strategy-defined order and take both endpoints of every edge not yet
// covered. random_edge shuffles the edge order with `seed`;
// degree_prioritized sorts by max endpoint degree, then degree sum, with the
// seeded shuffle breaking remaining ties. Deterministic per (graph, strategy,
// seed).
Cover approx_vertex_cover(const Graph& g, CoverStrategy strategy, std::uint64_t seed);

// (h+1)-approximate minimum h-hop cover: repeatedly finds a directed simple
// path of exactly h edges among uncovered vertices (depth-limited DFS, start
// vertices in seeded order) and takes all h+1 path vertices.
Cover path_hop_cover(const Graph& g, std::uint32_t h, std::uint64_t seed);

// h-hop cover builder. h = 1 is exactly approx_vertex_cover. For h >= 2 it
// evaluates the path-based h-hop cover together with every lower-hop
// candidate (the 1-hop candidate built with `strategy`) and returns the
// smallest, reinterpreted at hop h. This makes |cover(h=j)| <= |cover(h=i)|
// for i <= j a construction guarantee while preserving the (h+1)-approximation
// bound.
Cover approx_h_hop_cover(const Graph& g, std::uint32_t h, CoverStrategy strategy,
                         std::uint64_t seed);

// Minimum h-hop cover by branch and bound over violating paths. Deterministic.
// Throws std::invalid_argument when n > 20.
Cover exact_min_vertex_cover(const Graph& g, std::uint32_t h);

// True iff no directed simple path of exactly cover.hop() edges avoids the
// cover. For hop = 1 this is the all-edges-covered scan.
bool is_h_hop_cover(const Graph& g, const Cover& cover);

} // namespace kreach
