#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kreach {

using VertexId = std::uint32_t;

// Distance value for "not reached within the bound".
inline constexpr std::uint32_t kInfDist = std::numeric_limits<std::uint32_t>::max();

enum class Direction { forward, backward };

// (n, m, edge-multiset hash) triple identifying the graph an index was built on.
struct GraphFingerprint {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t edge_hash = 0;

    friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

// Immutable directed unweighted graph.
//
// Vertices are dense 0-based ids. Both adjacency directions are kept as CSR
// arrays with strictly ascending neighbor lists (exact transposes of each
// other); duplicate edges and self-loops are dropped on construction. When the
// input used sparse external ids, `original_id` maps back to them.
class Graph {
public:
    Graph() = default;

    // Build from edges over internal ids already in [0, n). Duplicates and
    // self-loops are dropped. Throws std::invalid_argument on out-of-range ids.
    static Graph from_edges(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges);

    std::uint32_t num_vertices() const noexcept { return n_; }
    std::uint64_t num_edges() const noexcept { return m_; }

    std::span<const VertexId> out_neighbors(VertexId v) const {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    std::span<const VertexId> in_neighbors(VertexId v) const {
        return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
    }
    std::span<const VertexId> neighbors(VertexId v, Direction dir) const {
        return dir == Direction::forward ? out_neighbors(v) : in_neighbors(v);
    }

    std::uint32_t out_degree(VertexId v) const {
        return static_cast<std::uint32_t>(out_offsets_[v + 1] - out_offsets_[v]);
    }
    std::uint32_t in_degree(VertexId v) const {
        return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
    }

    // |in_neighbors(v) ∪ out_neighbors(v)|: distinct vertices adjacent to v
    // in either direction.
    std::uint32_t degree(VertexId v) const;

    // degree(v) for every v, computed in one pass.
    std::vector<std::uint32_t> degrees() const;

    bool has_edge(VertexId u, VertexId v) const;

    // External-id mapping. Internal ids are assigned by ascending original id,
    // so the mapping is monotone. Identity when the input was already dense.
    std::uint64_t original_id(VertexId v) const {
        return original_ids_.empty() ? v : original_ids_[v];
    }
    // Returns kInfDist-like sentinel (n) when the original id is unknown.
    std::uint32_t to_internal(std::uint64_t original) const;
    bool has_remap() const noexcept { return !original_ids_.empty(); }

    // Order-independent hash of the edge multiset combined with (n, m).
    // Computed once at construction.
    const GraphFingerprint& fingerprint() const noexcept { return fingerprint_; }

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    GraphFingerprint fingerprint_;
    std::vector<std::uint64_t> out_offsets_{0};
    std::vector<VertexId> out_targets_;
    std::vector<std::uint64_t> in_offsets_{0};
    std::vector<VertexId> in_targets_;
    std::vector<std::uint64_t> original_ids_; // empty => identity

    friend Graph load_edge_list(std::istream& in);
};

// Parse "u v" edge-list text. Lines whose first non-space character is '#'
// and blank lines are skipped; every other line must hold exactly two
// unsigned integers. Sparse ids are remapped to dense ids by ascending
// original id. Throws ParseError with the 1-based line number on bad input.
Graph load_edge_list(std::istream& in);

// Reusable bounded-BFS scratch. Distances and visit marks are epoch-stamped so
// repeated runs on the same graph cost O(visited), not O(n).
class BoundedBfs {
public:
    explicit BoundedBfs(std::uint32_t n);

    // Runs BFS from `src` following `dir` edges, stopping at depth `k`.
    // Returns the visited vertices in visit order (src first, distance 0).
    std::span<const VertexId> run(const Graph& g, VertexId src, std::uint32_t k, Direction dir);

    // Same traversal but stops as soon as `target` is reached; returns whether
    // it was reached within `k` hops.
    bool run_to_target(const Graph& g, VertexId src, VertexId target, std::uint32_t k,
                       Direction dir);

    // Distance assigned by the most recent run; kInfDist if not visited.
    std::uint32_t dist(VertexId v) const {
        return stamp_[v] == epoch_ ? dist_[v] : kInfDist;
    }

private:
    void begin_epoch();

    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::vector<VertexId> order_;
    std::uint32_t epoch_ = 0;
};

// Map of vertex -> exact shortest-path distance for all vertices within k hops
// of src (src included at distance 0).
std::unordered_map<VertexId, std::uint32_t> bounded_bfs(const Graph& g, VertexId src,
                                                        std::uint32_t k, Direction dir);

// bounded_bfs minus the {src: 0} entry: vertices at exact distance 1..h.
std::unordered_map<VertexId, std::uint32_t> hop_neighbors(const Graph& g, VertexId v,
                                                          std::uint32_t h, Direction dir);

} // namespace kreach
