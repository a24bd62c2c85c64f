#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kreach/cover.hpp"
#include "kreach/errors.hpp"
#include "kreach/hk.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/oracle.hpp"
#include "kreach/query.hpp"
#include "kreach/synthetic.hpp"

using namespace kreach;
using fixtures::demo_graph;
using fixtures::naive_dist;
using fixtures::path_graph;

namespace {
HKReachIndex demo_hk() {
    Graph g = demo_graph();
    return build_hk(g, 2, 5, Cover::from_members(10, 2, {3, 4, 6}));
}
} // namespace

TEST_CASE("hop-2 demo index stores clamped weights as offsets") {
    HKReachIndex idx = demo_hk();
    CHECK(idx.h() == 2);
    CHECK(idx.k() == 5);

    // (3,6) at distance 2: weight max(k-2h, 2) = 2, offset k - 2 = 3.
    REQUIRE(idx.edge_offset(3, 6).has_value());
    CHECK(*idx.edge_offset(3, 6) == 3);
    CHECK(idx.decode_weight(*idx.edge_offset(3, 6)) == 2);

    // (3,4) and (4,6) at distance 1: weight clamps up to k-2h = 1, offset 4.
    REQUIRE(idx.edge_offset(3, 4).has_value());
    CHECK(idx.decode_weight(*idx.edge_offset(3, 4)) == 1);
    REQUIRE(idx.edge_offset(4, 6).has_value());
    CHECK(idx.decode_weight(*idx.edge_offset(4, 6)) == 1);

    CHECK_FALSE(idx.edge_offset(6, 3).has_value()); // unreachable direction
    CHECK_FALSE(idx.edge_offset(4, 4).has_value()); // no self-loops
}

TEST_CASE("hop-2 demo queries at k=5") {
    Graph g = demo_graph();
    HKReachIndex idx = demo_hk();

    // Case 1: both in cover, edge present.
    CHECK(query_hk(g, idx, 4, 6) == QueryAnswer{true, QueryCase::case1});
    // Case 2: s=3 in cover, t=7 not; in-ball of 7 at depth 2 holds 6 (j=1):
    // weight(3,6)=2 <= k-1.
    CHECK(query_hk(g, idx, 3, 7) == QueryAnswer{true, QueryCase::case2});
    // Nothing reaches 0: its in-neighborhood is empty at every depth.
    CHECK_FALSE(query_hk(g, idx, 3, 0).reachable);
    CHECK_FALSE(query_hk(g, idx, 9, 0).reachable);
    // Case 4 hit: 0 -> 8. fwd ball of 0 covers {3 at i=2}, bwd ball of 8 covers
    // {6 at j=1, 4 at j=2}: weight(3,6)=2 <= k-i-j=2.
    CHECK(query_hk(g, idx, 0, 8) == QueryAnswer{true, QueryCase::case4});
    // Case 4 miss: 0 -> 9. bwd ball of 9 = {8 at 1, 6 at 2}: best pair (3,6)
    // needs weight <= k-2-2 = 1 but weight is 2. True distance is 6 > k.
    CHECK(query_hk(g, idx, 0, 9) == QueryAnswer{false, QueryCase::case4});
    CHECK(naive_dist(g, 0, 9) == 6);
}

TEST_CASE("pre-check catches cover-avoiding short paths") {
    Graph g = demo_graph();
    HKReachIndex idx = demo_hk();
    // 0 -> 1 is a 1-edge path that avoids the 2-hop cover {3,4,6} entirely;
    // only paths of exactly h edges are guaranteed to touch the cover, so the
    // case analysis alone would answer false.
    QueryAnswer a = query_hk(g, idx, 0, 1);
    CHECK(a.reachable);
    CHECK(a.resolved_by == QueryCase::case4); // labeled by membership pattern
    CHECK(query_hk(g, idx, 2, 1).reachable);
    // 8 -> 9 likewise (8, 9 both outside the cover).
    CHECK(query_hk(g, idx, 8, 9).reachable);
}

TEST_CASE("clamped weights on a long path at h=2, k=7") {
    Graph g = path_graph(10);
    std::vector<VertexId> evens = {0, 2, 4, 6, 8};
    HKReachIndex idx = build_hk(g, 2, 7, Cover::from_members(10, 2, evens));
    // Distance-2 pairs clamp up to weight k-2h = 3 (offset 4).
    REQUIRE(idx.edge_offset(2, 4).has_value());
    CHECK(idx.decode_weight(*idx.edge_offset(2, 4)) == 3); // max(3, 2)
    // Distance-6 pair stores its true distance.
    REQUIRE(idx.edge_offset(0, 6).has_value());
    CHECK(idx.decode_weight(*idx.edge_offset(0, 6)) == 6);
    // Distance-8 pair exceeds k: absent.
    CHECK_FALSE(idx.edge_offset(0, 8).has_value());
}

TEST_CASE("h=1 build degenerates to the plain index semantics") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 40);
        Graph g = random_digraph(n, 0.1, rng());
        Cover cover = approx_vertex_cover(g, CoverStrategy::random_edge, trial);
        std::uint32_t k = 3 + static_cast<std::uint32_t>(trial % 4);
        KReachIndex plain = build_kreach(g, k, cover);
        HKReachIndex hk = build_hk(g, 1, k, cover);
        CHECK(hk.edge_count() == plain.edge_count());
        HkQuerier querier(g, hk);
        for (VertexId s = 0; s < n; ++s)
            for (VertexId t = 0; t < n; ++t)
                CHECK(querier(s, t).reachable == query(g, plain, s, t).reachable);
    }
}

TEST_CASE("hop-indexed queries equal the oracle across h and k") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 45);
        Graph g = random_digraph(n, trial % 2 ? 0.06 : 0.15, rng());
        for (std::uint32_t h : {2u, 3u}) {
            Cover cover = approx_h_hop_cover(g, h, CoverStrategy::degree_prioritized, trial);
            for (std::uint32_t k = 2 * h + 1; k <= 9; k += 2) {
                HKReachIndex idx = build_hk(g, h, k, cover);
                DistanceMatrix m = all_pairs_bounded(g, k);
                HkQuerier querier(g, idx);
                for (VertexId s = 0; s < n; ++s)
                    for (VertexId t = 0; t < n; ++t)
                        CHECK(querier(s, t).reachable == (s == t || m.at(s, t) <= k));
            }
        }
    }
}

TEST_CASE("stored hop-index weights satisfy the closed form") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 40);
        Graph g = random_digraph(n, 0.12, rng());
        for (std::uint32_t h : {2u, 3u}) {
            Cover cover = approx_h_hop_cover(g, h, CoverStrategy::random_edge, trial);
            std::uint32_t k = 2 * h + 2;
            HKReachIndex idx = build_hk(g, h, k, cover);
            for (VertexId u : cover.members()) {
                for (VertexId v : cover.members()) {
                    if (u == v) continue;
                    std::uint32_t dist = naive_dist(g, u, v);
                    auto offset = idx.edge_offset(u, v);
                    if (dist <= k) {
                        REQUIRE(offset.has_value());
                        CHECK(idx.decode_weight(*offset) == std::max(k - 2 * h, dist));
                    } else {
                        CHECK_FALSE(offset.has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("hop-index build validations") {
    Graph g = demo_graph();
    Cover two_hop = Cover::from_members(10, 2, {3, 4, 6});
    CHECK_THROWS_AS(build_hk(g, 2, 4, two_hop), std::invalid_argument);  // k must exceed 2h
    CHECK_THROWS_AS(build_hk(g, 0, 3, two_hop), std::invalid_argument);  // h >= 1
    CHECK_THROWS_AS(build_hk(g, 3, 7, two_hop), ValidationError);        // hop mismatch
    CHECK_THROWS_AS(build_hk(g, 2, 5, Cover::from_members(10, 2, {3})),
                    ValidationError); // not a cover
    Graph other = path_graph(10);
    HKReachIndex idx = demo_hk();
    CHECK_THROWS_AS(HkQuerier(other, idx), ValidationError); // wrong graph
}
