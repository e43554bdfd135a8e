#pragma once

// Small named graphs and seeded random families for tests and benchmarks.
// Random generators draw from std::mt19937_64 and derive every value from raw
// 64-bit outputs, so a seed gives the same graph on every platform.

#include <cstdint>

#include "localsep/graph.hpp"

namespace localsep::gen {

Graph cycle(std::size_t n, Weight w = 1);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
/// Two triangles sharing vertex 0.
Graph bowtie();
/// Two K4s on {0,1,2,3} and {0,1,4,5}.
Graph two_k4_sharing_edge();
/// Ring of `k` K4s: the j-th K4 spans {a_j, b_j, a_{j+1}, b_{j+1}} (indices
/// mod k), with a_j = 2j, b_j = 2j + 1 labeled "a<j>" / "b<j>".
Graph k4_ring(std::size_t k = 6);

/// G(n, p) with weights uniform in [1, max_weight].
Graph random_graph(std::size_t n, double p, Weight max_weight, std::uint64_t seed);
/// random_graph plus a random spanning tree so the result is connected.
Graph random_connected_graph(std::size_t n, double p, Weight max_weight, std::uint64_t seed);

/// n points in a square of side spacing * sqrt(n); points closer than the
/// radius that yields about `target_edges` edges are joined. Weights are
/// rounded Euclidean lengths (minimum 1); coordinates are kept.
Graph random_geometric_graph(std::size_t n, std::size_t target_edges, double spacing,
                             std::uint64_t seed);

}  // namespace localsep::gen
