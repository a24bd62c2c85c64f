#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kreach/graph.hpp"
#include "kreach/kreach_index.hpp"

namespace kreach {

// Which branch decided a query: the trivial s == t case, the k = 1 edge
// check, or one of the four cover-membership cases (both endpoints covered,
// source only, target only, neither).
enum class QueryCase : std::uint8_t { self, k1_edge, case1, case2, case3, case4 };

std::string_view to_string(QueryCase c);

struct QueryAnswer {
    bool reachable = false;
    QueryCase resolved_by = QueryCase::self;

    friend bool operator==(const QueryAnswer&, const QueryAnswer&) = default;
};

struct CaseHistogram {
    std::array<std::uint64_t, 6> counts{};

    void add(QueryCase c) { counts[static_cast<std::size_t>(c)]++; }
    std::uint64_t at(QueryCase c) const { return counts[static_cast<std::size_t>(c)]; }
    std::uint64_t total() const;

    friend bool operator==(const CaseHistogram&, const CaseHistogram&) = default;
};

// Answers "can s reach t in at most idx.k() hops" from the index plus one-hop
// graph adjacency only (no traversal). Exact for every vertex pair.
QueryAnswer query(const Graph& g, const KReachIndex& idx, VertexId s, VertexId t);

// k = 1 needs no index: edge existence.
QueryAnswer query_k1(const Graph& g, VertexId s, VertexId t);

struct BatchResult {
    std::vector<QueryAnswer> answers;
    CaseHistogram histogram;
};

// Runs query() over pairs in order. The first out-of-range pair aborts with
// std::invalid_argument naming its position.
BatchResult batch_query(const Graph& g, const KReachIndex& idx,
                        std::span<const std::pair<VertexId, VertexId>> pairs);

} // namespace kreach
