#include "kreach/hk.hpp"

#include <algorithm>
#include <stdexcept>

#include "kreach/errors.hpp"
#include "index_build.hpp"

namespace kreach {

HKReachIndex HKReachIndex::from_parts(std::uint32_t h, std::uint32_t k, Cover cover,
                                      WeightedAdjacency adj, GraphFingerprint fp,
                                      BuildStats stats) {
    if (adj.rows() != cover.size())
        throw std::invalid_argument("adjacency row count does not match cover size");
    HKReachIndex idx;
    idx.h_ = h;
    idx.k_ = k;
    idx.cover_ = std::move(cover);
    idx.adj_ = std::move(adj);
    idx.radj_ = idx.adj_.transposed(idx.cover_);
    idx.fp_ = fp;
    idx.stats_ = stats;
    return idx;
}

HKReachIndex build_hk(const Graph& g, std::uint32_t h, std::uint32_t k, const Cover& cover,
                      unsigned threads) {
    if (h < 1) throw std::invalid_argument("build_hk: h must be >= 1");
    if (h > 127) throw std::invalid_argument("build_hk: h too large for one-byte offsets");
    if (k <= 2 * h) throw std::invalid_argument("build_hk: k must exceed 2h");
    if (cover.n() != g.num_vertices())
        throw ValidationError("cover was built for a different vertex count");
    if (cover.hop() != h) throw ValidationError("cover hop does not match h");
    if (!is_h_hop_cover(g, cover)) throw ValidationError("not a valid h-hop cover");

    // Stored offset is k - max(k-2h, dist) = min(2h, k - dist).
    auto offset_of = [h, k](std::uint32_t dist) {
        return static_cast<std::uint8_t>(std::min<std::uint32_t>(2 * h, k - dist));
    };
    auto [adj, stats] = detail::build_cover_adjacency(g, k, cover, threads, offset_of);
    return HKReachIndex::from_parts(h, k, std::move(cover), std::move(adj), g.fingerprint(),
                                    stats);
}

HkQuerier::HkQuerier(const Graph& g, const HKReachIndex& idx)
    : g_(g), idx_(idx), fwd_(g.num_vertices()), bwd_(g.num_vertices()) {
    if (!(idx.fingerprint() == g.fingerprint()))
        throw ValidationError("index was built for a different graph");
}

QueryAnswer HkQuerier::operator()(VertexId s, VertexId t) {
    if (s >= g_.num_vertices() || t >= g_.num_vertices())
        throw std::invalid_argument("query: vertex out of range");
    if (s == t) return {true, QueryCase::self};

    const Cover& cover = idx_.cover();
    std::uint32_t h = idx_.h();
    std::uint32_t k = idx_.k();
    bool s_in = cover.contains(s);
    bool t_in = cover.contains(t);
    QueryCase verdict_case = s_in ? (t_in ? QueryCase::case1 : QueryCase::case2)
                                  : (t_in ? QueryCase::case3 : QueryCase::case4);

    // Paths shorter than h edges can avoid an h-hop cover entirely, so probe
    // them directly before the cover-based cases.
    if (h >= 2 && fwd_.run_to_target(g_, s, t, std::min(k, h - 1), Direction::forward))
        return {true, verdict_case};

    if (s_in && t_in) return {idx_.edge_offset(s, t).has_value(), verdict_case};

    if (s_in) {
        // Case 2: cover vertex v at minimal distance j <= h from t (backward)
        // with weight(s, v) <= k - j, i.e. stored offset >= j; v == s needs no
        // index edge.
        std::uint32_t row = cover.rank_of(s);
        for (VertexId v : bwd_.run(g_, t, h, Direction::backward)) {
            if (v == t) continue;
            if (v == s) return {true, verdict_case};
            if (!cover.contains(v)) continue;
            auto offset = idx_.adj().find(row, v);
            if (offset && *offset >= bwd_.dist(v)) return {true, verdict_case};
        }
        return {false, verdict_case};
    }
    if (t_in) {
        // Case 3: mirror image via the reverse adjacency.
        std::uint32_t row = cover.rank_of(t);
        for (VertexId u : fwd_.run(g_, s, h, Direction::forward)) {
            if (u == s) continue;
            if (u == t) return {true, verdict_case};
            if (!cover.contains(u)) continue;
            auto offset = idx_.radj().find(row, u);
            if (offset && *offset >= fwd_.dist(u)) return {true, verdict_case};
        }
        return {false, verdict_case};
    }

    // Case 4: cover vertices u (distance i forward of s) and v (distance j
    // backward of t) with u == v or weight(u, v) <= k - i - j (offset >= i+j).
    fwd_cover_.clear();
    for (VertexId u : fwd_.run(g_, s, h, Direction::forward))
        if (u != s && cover.contains(u)) fwd_cover_.emplace_back(u, fwd_.dist(u));
    if (fwd_cover_.empty()) return {false, verdict_case};
    bwd_cover_.clear();
    for (VertexId v : bwd_.run(g_, t, h, Direction::backward))
        if (v != t && cover.contains(v)) bwd_cover_.emplace_back(v, bwd_.dist(v));
    if (bwd_cover_.empty()) return {false, verdict_case};
    std::sort(bwd_cover_.begin(), bwd_cover_.end());

    for (auto [u, i] : fwd_cover_) {
        auto it = std::lower_bound(bwd_cover_.begin(), bwd_cover_.end(),
                                   std::make_pair(u, std::uint32_t{0}));
        if (it != bwd_cover_.end() && it->first == u && i + it->second <= k)
            return {true, verdict_case}; // u == v: a real path through one cover vertex
        std::uint32_t row = cover.rank_of(u);
        auto tgt = idx_.adj().row_targets(row);
        auto wts = idx_.adj().row_weights(row);
        std::size_t a = 0, b = 0;
        while (a < tgt.size() && b < bwd_cover_.size()) {
            if (tgt[a] < bwd_cover_[b].first) {
                ++a;
            } else if (bwd_cover_[b].first < tgt[a]) {
                ++b;
            } else {
                if (wts[a] >= i + bwd_cover_[b].second) return {true, verdict_case};
                ++a, ++b;
            }
        }
    }
    return {false, verdict_case};
}

QueryAnswer query_hk(const Graph& g, const HKReachIndex& idx, VertexId s, VertexId t) {
    HkQuerier querier(g, idx);
    return querier(s, t);
}

} // namespace kreach
