#include "kreach/query.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kreach/errors.hpp"

namespace kreach {

std::string_view to_string(QueryCase c) {
    switch (c) {
        case QueryCase::self: return "self";
        case QueryCase::k1_edge: return "k1-edge";
        case QueryCase::case1: return "case1";
        case QueryCase::case2: return "case2";
        case QueryCase::case3: return "case3";
        case QueryCase::case4: return "case4";
    }
    return "unknown";
}

std::uint64_t CaseHistogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

void check_pair(const Graph& g, VertexId s, VertexId t) {
    if (s >= g.num_vertices() || t >= g.num_vertices())
        throw std::invalid_argument("query: vertex out of range");
}

// Is there an index edge (row -> v) with weight code <= max_code and v in the
// sorted candidate list? Iterates whichever side is much smaller, otherwise
// runs a linear merge.
bool row_meets(const WeightedAdjacency& adj, std::uint32_t row,
               std::span<const VertexId> candidates, std::uint8_t max_code) {
    auto tgt = adj.row_targets(row);
    if (tgt.empty() || candidates.empty()) return false;

    if (candidates.size() * 8 < tgt.size()) {
        for (VertexId v : candidates) {
            auto code = adj.find(row, v);
            if (code && *code <= max_code) return true;
        }
        return false;
    }
    if (tgt.size() * 8 < candidates.size()) {
        auto wts = adj.row_weights(row);
        for (std::size_t i = 0; i < tgt.size(); ++i)
            if (wts[i] <= max_code &&
                std::binary_search(candidates.begin(), candidates.end(), tgt[i]))
                return true;
        return false;
    }
    auto wts = adj.row_weights(row);
    std::size_t i = 0, j = 0;
    while (i < tgt.size() && j < candidates.size()) {
        if (tgt[i] < candidates[j]) {
            ++i;
        } else if (candidates[j] < tgt[i]) {
            ++j;
        } else {
            if (wts[i] <= max_code) return true;
            ++i, ++j;
        }
    }
    return false;
}

bool sorted_intersect(std::span<const VertexId> a, std::span<const VertexId> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            return true;
    }
    return false;
}

} // namespace

QueryAnswer query(const Graph& g, const KReachIndex& idx, VertexId s, VertexId t) {
    check_pair(g, s, t);
    if (!(idx.fingerprint() == g.fingerprint()))
        throw ValidationError("index was built for a different graph");
    if (s == t) return {true, QueryCase::self};

    const Cover& cover = idx.cover();
    bool s_in = cover.contains(s);
    bool t_in = cover.contains(t);

    if (s_in && t_in) {
        // Case 1: both covered; the index edge is exact.
        return {idx.edge_code(s, t).has_value(), QueryCase::case1};
    }
    if (s_in) {
        // Case 2: some in-neighbor v of t with dist(s, v) <= k-1; v == s is
        // the virtual self-loop (s one hop from t).
        auto in_t = g.in_neighbors(t);
        if (std::binary_search(in_t.begin(), in_t.end(), s)) return {true, QueryCase::case2};
        return {row_meets(idx.adj(), cover.rank_of(s), in_t, 1), QueryCase::case2};
    }
    if (t_in) {
        // Case 3: mirror of case 2 through the reverse adjacency.
        auto out_s = g.out_neighbors(s);
        if (std::binary_search(out_s.begin(), out_s.end(), t)) return {true, QueryCase::case3};
        return {row_meets(idx.radj(), cover.rank_of(t), out_s, 1), QueryCase::case3};
    }

    // Case 4: u ∈ outNei(s), v ∈ inNei(t) with u == v (a 2-hop path) or an
    // index edge of weight <= k-2 between them. Both u and v are cover
    // members whenever the cover is valid.
    auto out_s = g.out_neighbors(s);
    auto in_t = g.in_neighbors(t);
    if (sorted_intersect(out_s, in_t)) return {true, QueryCase::case4};
    if (out_s.size() <= in_t.size()) {
        for (VertexId u : out_s) {
            std::uint32_t row = cover.rank_of(u);
            if (row == cover.size()) continue;
            if (row_meets(idx.adj(), row, in_t, 0)) return {true, QueryCase::case4};
        }
    } else {
        for (VertexId v : in_t) {
            std::uint32_t row = cover.rank_of(v);
            if (row == cover.size()) continue;
            if (row_meets(idx.radj(), row, out_s, 0)) return {true, QueryCase::case4};
        }
    }
    return {false, QueryCase::case4};
}

QueryAnswer query_k1(const Graph& g, VertexId s, VertexId t) {
    check_pair(g, s, t);
    if (s == t) return {true, QueryCase::self};
    return {g.has_edge(s, t), QueryCase::k1_edge};
}

BatchResult batch_query(const Graph& g, const KReachIndex& idx,
                        std::span<const std::pair<VertexId, VertexId>> pairs) {
    BatchResult result;
    result.answers.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [s, t] = pairs[i];
        if (s >= g.num_vertices() || t >= g.num_vertices())
            throw std::invalid_argument("batch_query: pair " + std::to_string(i) +
                                        " is out of range");
        QueryAnswer ans = query(g, idx, s, t);
        result.histogram.add(ans.resolved_by);
        result.answers.push_back(ans);
    }
    return result;
}

} // namespace kreach
