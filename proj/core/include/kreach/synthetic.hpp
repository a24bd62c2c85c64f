#pragma once

#include <cstdint>

#include "kreach/graph.hpp"

namespace kreach {

// Directed Erdos-Renyi graph: each ordered pair (u, v), u != v, becomes an
// edge independently with probability p. Bitwise deterministic per seed.
Graph random_digraph(std::uint32_t n, double p, std::uint64_t seed);

// Directed graph with Zipf-Mandelbrot-weighted endpoints: both ends of every
// edge are drawn with probability proportional to (i + shift)^-alpha, where
// shift = 1 + n/2000, so low ids become hubs whose share shrinks as the graph
// grows. Draws until target_m distinct edges exist (or the attempt budget
// runs out on dense/small inputs), then trims to exactly target_m when
// overshot. Bitwise deterministic per seed.
Graph power_law_digraph(std::uint32_t n, std::uint64_t target_m, double alpha,
                        std::uint64_t seed);

} // namespace kreach
