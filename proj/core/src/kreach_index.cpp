#include "kreach/kreach_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "kreach/errors.hpp"
#include "index_build.hpp"

namespace kreach {

std::optional<std::uint8_t> WeightedAdjacency::find(std::uint32_t row, VertexId v) const {
    auto nbrs = row_targets(row);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return std::nullopt;
    return weights[offsets[row] + static_cast<std::uint64_t>(it - nbrs.begin())];
}

WeightedAdjacency WeightedAdjacency::transposed(const Cover& cover) const {
    std::size_t nrows = cover.size();
    WeightedAdjacency r;
    r.offsets.assign(nrows + 1, 0);
    for (VertexId v : targets) r.offsets[cover.rank_of(v) + 1]++;
    for (std::size_t i = 0; i < nrows; ++i) r.offsets[i + 1] += r.offsets[i];
    r.targets.resize(targets.size());
    r.weights.resize(targets.size());
    std::vector<std::uint64_t> cursor(r.offsets.begin(), r.offsets.end() - 1);
    // Iterating source rows in ascending rank keeps every reverse row sorted.
    auto members = cover.members();
    for (std::uint32_t row = 0; row < nrows; ++row) {
        VertexId u = members[row];
        for (std::uint64_t e = offsets[row]; e < offsets[row + 1]; ++e) {
            std::uint64_t slot = cursor[cover.rank_of(targets[e])]++;
            r.targets[slot] = u;
            r.weights[slot] = weights[e];
        }
    }
    return r;
}

std::uint8_t weight_code_of(std::uint32_t dist, std::uint32_t k) {
    if (dist < 1 || dist > k) throw std::invalid_argument("weight_code_of: distance outside [1, k]");
    if (dist + 2 <= k) return 0;
    return dist + 1 == k ? 1 : 2;
}

KReachIndex KReachIndex::from_parts(std::uint32_t k, Cover cover, WeightedAdjacency adj,
                                    GraphFingerprint fp, BuildStats stats) {
    if (adj.rows() != cover.size())
        throw std::invalid_argument("adjacency row count does not match cover size");
    KReachIndex idx;
    idx.k_ = k;
    idx.cover_ = std::move(cover);
    idx.adj_ = std::move(adj);
    idx.radj_ = idx.adj_.transposed(idx.cover_);
    idx.fp_ = fp;
    idx.stats_ = stats;
    return idx;
}

KReachIndex build_kreach(const Graph& g, std::uint32_t k, const Cover& cover, unsigned threads) {
    if (k < 2) throw std::invalid_argument("build_kreach: k must be >= 2");
    if (cover.n() != g.num_vertices())
        throw ValidationError("cover was built for a different vertex count");
    if (cover.hop() != 1) throw ValidationError("build_kreach requires a 1-hop cover");
    if (!is_h_hop_cover(g, cover)) throw ValidationError("cover does not cover every edge");

    auto [adj, stats] = detail::build_cover_adjacency(
        g, k, cover, threads, [k](std::uint32_t dist) { return weight_code_of(dist, k); });
    return KReachIndex::from_parts(k, cover, std::move(adj), g.fingerprint(), stats);
}

} // namespace kreach
