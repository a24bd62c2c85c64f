#include "kreach/cover.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace kreach {

std::string_view to_string(CoverOrigin origin) {
    switch (origin) {
        case CoverOrigin::random_edge: return "random-edge";
        case CoverOrigin::degree_prioritized: return "degree-prioritized";
        case CoverOrigin::path_based: return "path-based";
        case CoverOrigin::exact: return "exact";
        case CoverOrigin::external: return "external";
    }
    return "unknown";
}

Cover Cover::from_members(std::uint32_t n, std::uint32_t hop, std::vector<VertexId> members,
                          CoverOrigin origin) {
    if (hop < 1) throw std::invalid_argument("cover hop must be >= 1");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= n)
        throw std::invalid_argument("cover member out of range");
    Cover c;
    c.hop_ = hop;
    c.origin_ = origin;
    c.bitmap_.assign(n, false);
    for (VertexId v : members) c.bitmap_[v] = true;
    c.members_ = std::move(members);
    return c;
}

std::uint32_t Cover::rank_of(VertexId v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return static_cast<std::uint32_t>(members_.size());
    return static_cast<std::uint32_t>(it - members_.begin());
}

Cover Cover::with_hop(std::uint32_t hop) const {
    Cover c = *this;
    c.hop_ = hop;
    return c;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> all_edges(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.num_edges());
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.out_neighbors(u)) edges.emplace_back(u, v);
    return edges;
}

Cover members_from_bitmap(std::uint32_t n, std::uint32_t hop, const std::vector<bool>& bitmap,
                          CoverOrigin origin) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v)
        if (bitmap[v]) members.push_back(v);
    return Cover::from_members(n, hop, std::move(members), origin);
}

// Depth-limited DFS for a simple directed path of exactly h edges that avoids
// `blocked`, trying start vertices in the order given. Returns the path
// vertices (h+1 of them) or empty if none exists.
class PathFinder {
public:
    PathFinder(const Graph& g, std::uint32_t h) : g_(g), h_(h), on_path_(g.num_vertices(), false) {}

    std::vector<VertexId> find(const std::vector<bool>& blocked,
                               std::span<const VertexId> starts) {
        blocked_ = &blocked;
        for (VertexId s : starts) {
            if (blocked[s]) continue;
            path_.clear();
            if (extend(s)) return path_;
        }
        return {};
    }

    // Search restricted to paths starting at s.
    std::vector<VertexId> find_from(const std::vector<bool>& blocked, VertexId s) {
        blocked_ = &blocked;
        if (blocked[s]) return {};
        path_.clear();
        if (extend(s)) return path_;
        return {};
    }

private:
    bool extend(VertexId v) {
        path_.push_back(v);
        if (path_.size() == static_cast<std::size_t>(h_) + 1) return true;
        on_path_[v] = true;
        for (VertexId w : g_.out_neighbors(v)) {
            if ((*blocked_)[w] || on_path_[w]) continue;
            if (extend(w)) {
                on_path_[v] = false;
                return true;
            }
        }
        on_path_[v] = false;
        path_.pop_back();
        return false;
    }

    const Graph& g_;
    std::uint32_t h_;
    std::vector<bool> on_path_;
    std::vector<VertexId> path_;
    const std::vector<bool>* blocked_ = nullptr;
};

} // namespace

Cover approx_vertex_cover(const Graph& g, CoverStrategy strategy, std::uint64_t seed) {
    auto edges = all_edges(g);
    std::vector<std::uint64_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    if (strategy == CoverStrategy::degree_prioritized) {
        auto deg = g.degrees();
        std::vector<std::pair<std::uint32_t, std::uint32_t>> key(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            key[e] = {std::max(deg[u], deg[v]), deg[u] + deg[v]};
        }
        // stable sort on top of the shuffle: seed breaks remaining ties
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint64_t a, std::uint64_t b) { return key[a] > key[b]; });
    }

    std::vector<bool> in_cover(g.num_vertices(), false);
    for (std::uint64_t e : order) {
        auto [u, v] = edges[e];
        if (!in_cover[u] && !in_cover[v]) {
            in_cover[u] = true;
            in_cover[v] = true;
        }
    }
    return members_from_bitmap(g.num_vertices(), 1, in_cover,
                               strategy == CoverStrategy::random_edge
                                   ? CoverOrigin::random_edge
                                   : CoverOrigin::degree_prioritized);
}

Cover path_hop_cover(const Graph& g, std::uint32_t h, std::uint64_t seed) {
    if (h < 1) throw std::invalid_argument("hop must be >= 1");
    std::uint32_t n = g.num_vertices();
    std::vector<VertexId> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(starts.begin(), starts.end(), rng);

    std::vector<bool> in_cover(n, false);
    PathFinder finder(g, h);
    for (VertexId s : starts) {
        // Once no h-edge path starts at s, adding more cover vertices cannot
        // create one, so a single pass over start vertices is exhaustive.
        while (true) {
            auto path = finder.find_from(in_cover, s);
            if (path.empty()) break;
            for (VertexId v : path) in_cover[v] = true;
        }
    }
    return members_from_bitmap(n, h, in_cover, CoverOrigin::path_based);
}

Cover approx_h_hop_cover(const Graph& g, std::uint32_t h, CoverStrategy strategy,
                         std::uint64_t seed) {
    if (h < 1) throw std::invalid_argument("hop must be >= 1");
    if (h == 1) return approx_vertex_cover(g, strategy, seed);

    // Evaluate the native path cover plus every lower-hop candidate and keep
    // the smallest (lower-hop covers stay valid at hop h); ties keep the
    // higher-hop candidate.
    Cover best = path_hop_cover(g, h, seed);
    for (std::uint32_t i = h; i-- > 1;) {
        Cover c = i == 1 ? approx_vertex_cover(g, strategy, seed) : path_hop_cover(g, i, seed);
        if (c.size() < best.size()) best = std::move(c);
    }
    return best.hop() == h ? best : best.with_hop(h);
}

Cover exact_min_vertex_cover(const Graph& g, std::uint32_t h) {
    if (h < 1) throw std::invalid_argument("hop must be >= 1");
    std::uint32_t n = g.num_vertices();
    if (n > 20) throw std::invalid_argument("exact_min_vertex_cover: n must be <= 20");

    std::vector<VertexId> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    PathFinder finder(g, h);

    // Seed the bound with the approximate cover.
    Cover approx = h == 1 ? approx_vertex_cover(g, CoverStrategy::degree_prioritized, 0)
                          : approx_h_hop_cover(g, h, CoverStrategy::degree_prioritized, 0);
    std::size_t best_size = approx.size();
    std::vector<VertexId> best(approx.members().begin(), approx.members().end());

    std::vector<bool> chosen(n, false);
    std::vector<VertexId> stack;

    // Branch on the vertices of some uncovered h-edge path: any valid cover
    // must contain at least one of them.
    auto recurse = [&](auto&& self) -> void {
        if (stack.size() >= best_size) return;
        auto path = finder.find(chosen, starts);
        if (path.empty()) {
            best_size = stack.size();
            best = stack;
            return;
        }
        if (stack.size() + 1 >= best_size) return;
        for (VertexId v : path) {
            chosen[v] = true;
            stack.push_back(v);
            self(self);
            stack.pop_back();
            chosen[v] = false;
        }
    };
    recurse(recurse);
    return Cover::from_members(n, h, std::move(best), CoverOrigin::exact);
}

bool is_h_hop_cover(const Graph& g, const Cover& cover) {
    if (cover.n() != g.num_vertices())
        throw std::invalid_argument("cover was built for a different vertex count");
    std::uint32_t h = cover.hop();
    if (h == 1) {
        for (VertexId u = 0; u < g.num_vertices(); ++u) {
            if (cover.contains(u)) continue;
            for (VertexId v : g.out_neighbors(u))
                if (!cover.contains(v)) return false;
        }
        return true;
    }
    std::vector<bool> blocked(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) blocked[v] = cover.contains(v);
    std::vector<VertexId> starts(g.num_vertices());
    std::iota(starts.begin(), starts.end(), 0);
    PathFinder finder(g, h);
    return finder.find(blocked, starts).empty();
}

} // namespace kreach
