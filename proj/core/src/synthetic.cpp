#include "kreach/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace kreach {

namespace {

// rng() mapped to [0, 1) with 53 random bits; avoids the implementation-
// defined std::uniform_real_distribution so output is stable across stdlibs.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph random_digraph(std::uint32_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (p > 0.0 && n > 1) {
        edges.reserve(static_cast<std::size_t>(p * n * (n - 1)) + 16);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (u == v) continue;
                if (unit_double(rng) < p) edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph power_law_digraph(std::uint32_t n, std::uint64_t target_m, double alpha,
                        std::uint64_t seed) {
    if (n < 2 || target_m == 0) return Graph::from_edges(n, {});

    // Zipf-Mandelbrot weights (i + shift)^-alpha. The shift grows with n so
    // the top rank cannot absorb a constant fraction of all endpoint draws on
    // large graphs (which would glue the whole graph to one mega-hub); small
    // graphs (n <= 2000) keep the classic Zipf shape.
    const double shift = 1.0 + static_cast<double>(n / 2000);
    std::vector<double> cumulative(n);
    double total = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        total += std::pow(static_cast<double>(i) + shift, -alpha);
        cumulative[i] = total;
    }
    std::mt19937_64 rng(seed);
    auto pick = [&]() -> VertexId {
        double x = unit_double(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
        if (it == cumulative.end()) --it;
        return static_cast<VertexId>(it - cumulative.begin());
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(target_m + target_m / 4);
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_budget = 20 * target_m + 1000;
    while (attempts < attempt_budget) {
        std::uint64_t need = target_m - edges.size();
        std::uint64_t batch = need + need / 3 + 64;
        for (std::uint64_t i = 0; i < batch && attempts < attempt_budget; ++i) {
            ++attempts;
            VertexId u = pick();
            VertexId v = pick();
            if (u != v) edges.emplace_back(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (edges.size() >= target_m) break;
    }
    if (edges.size() > target_m) {
        std::shuffle(edges.begin(), edges.end(), rng);
        edges.resize(target_m);
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace kreach
