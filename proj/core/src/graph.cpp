#include "kreach/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kreach/errors.hpp"

namespace kreach {

namespace {

// splitmix64: cheap, well-distributed 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void build_csr(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
               bool transpose, std::vector<std::uint64_t>& offsets, std::vector<VertexId>& targets) {
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) offsets[(transpose ? v : u) + 1]++;
    for (std::uint32_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(edges.size());
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        if (transpose)
            targets[cursor[v]++] = u;
        else
            targets[cursor[u]++] = v;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                  targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
}

} // namespace

Graph Graph::from_edges(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
    for (const auto& [u, v] : edges)
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");

    // Canonicalize: drop self-loops, sort, dedup.
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    build_csr(n, edges, false, g.out_offsets_, g.out_targets_);
    build_csr(n, edges, true, g.in_offsets_, g.in_targets_);

    std::uint64_t h = 0;
    for (const auto& [u, v] : edges)
        h += mix64((static_cast<std::uint64_t>(u) << 32) | v); // commutative: multiset hash
    g.fingerprint_ = {n, g.m_,
                      mix64(h ^ mix64(n) ^ mix64(static_cast<std::uint64_t>(g.m_) << 1))};
    return g;
}

std::uint32_t Graph::degree(VertexId v) const {
    auto a = out_neighbors(v);
    auto b = in_neighbors(v);
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            ++i, ++j;
        ++count;
    }
    return static_cast<std::uint32_t>(count + (a.size() - i) + (b.size() - j));
}

std::vector<std::uint32_t> Graph::degrees() const {
    std::vector<std::uint32_t> deg(n_);
    for (VertexId v = 0; v < n_; ++v) deg[v] = degree(v);
    return deg;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nbrs = out_neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::uint32_t Graph::to_internal(std::uint64_t original) const {
    if (original_ids_.empty()) {
        return original < n_ ? static_cast<std::uint32_t>(original) : n_;
    }
    auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
    if (it == original_ids_.end() || *it != original) return n_;
    return static_cast<std::uint32_t>(it - original_ids_.begin());
}

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::vector<std::uint64_t> ids;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::istringstream ls(line);
        std::uint64_t u, v;
        if (!(ls >> u >> v))
            throw ParseError(lineno, "expected two unsigned integers");
        std::string extra;
        if (ls >> extra)
            throw ParseError(lineno, "trailing token '" + extra + "'");

        ids.push_back(u);
        ids.push_back(v);
        raw.emplace_back(u, v);
    }

    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > std::numeric_limits<std::uint32_t>::max())
        throw ParseError(lineno, "too many distinct vertices");

    auto rank = [&](std::uint64_t id) {
        return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) edges.emplace_back(rank(u), rank(v));

    Graph g = Graph::from_edges(static_cast<std::uint32_t>(ids.size()), std::move(edges));
    bool identity = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != i) {
            identity = false;
            break;
        }
    if (!identity) g.original_ids_ = std::move(ids);
    return g;
}

BoundedBfs::BoundedBfs(std::uint32_t n) : dist_(n, 0), stamp_(n, 0) {
    order_.reserve(n);
}

void BoundedBfs::begin_epoch() {
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
    order_.clear();
}

std::span<const VertexId> BoundedBfs::run(const Graph& g, VertexId src, std::uint32_t k,
                                          Direction dir) {
    begin_epoch();
    stamp_[src] = epoch_;
    dist_[src] = 0;
    order_.push_back(src);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        VertexId u = order_[head];
        std::uint32_t du = dist_[u];
        if (du >= k) break; // frontier already at the bound; order_ is distance-sorted
        for (VertexId v : g.neighbors(u, dir)) {
            if (stamp_[v] == epoch_) continue;
            stamp_[v] = epoch_;
            dist_[v] = du + 1;
            order_.push_back(v);
        }
    }
    return {order_.data(), order_.size()};
}

bool BoundedBfs::run_to_target(const Graph& g, VertexId src, VertexId target, std::uint32_t k,
                               Direction dir) {
    begin_epoch();
    if (src == target) return true;
    stamp_[src] = epoch_;
    dist_[src] = 0;
    order_.push_back(src);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        VertexId u = order_[head];
        std::uint32_t du = dist_[u];
        if (du >= k) break;
        for (VertexId v : g.neighbors(u, dir)) {
            if (stamp_[v] == epoch_) continue;
            if (v == target) return true;
            stamp_[v] = epoch_;
            dist_[v] = du + 1;
            order_.push_back(v);
        }
    }
    return false;
}

std::unordered_map<VertexId, std::uint32_t> bounded_bfs(const Graph& g, VertexId src,
                                                        std::uint32_t k, Direction dir) {
    if (src >= g.num_vertices()) throw std::invalid_argument("bounded_bfs: vertex out of range");
    BoundedBfs bfs(g.num_vertices());
    std::unordered_map<VertexId, std::uint32_t> result;
    for (VertexId v : bfs.run(g, src, k, dir)) result.emplace(v, bfs.dist(v));
    return result;
}

std::unordered_map<VertexId, std::uint32_t> hop_neighbors(const Graph& g, VertexId v,
                                                          std::uint32_t h, Direction dir) {
    auto result = bounded_bfs(g, v, h, dir);
    result.erase(v);
    return result;
}

} // namespace kreach
