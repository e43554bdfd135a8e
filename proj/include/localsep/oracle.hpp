#pragma once

// Brute-force reference implementations. Each one transcribes a definition
// directly and is exponential or polynomial of high degree, so every entry
// point guards the instance size and throws PreconditionError beyond it.

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "localsep/graph.hpp"
#include "localsep/two_separators.hpp"

namespace localsep::oracle {

/// Walk enumeration and the literal connectivity graph.
inline constexpr std::size_t kMaxVertices = 12;
/// Simple-cycle enumeration.
inline constexpr std::size_t kMaxCycleVertices = 16;
/// Vertex-deletion oracles (articulation points, 2-cuts, blocks).
inline constexpr std::size_t kMaxCutVertices = 200;
inline constexpr Distance kMaxWalkWeight = 10;

/// For one root, the smallest weight of a closed walk through the root that
/// uses each vertex / edge (kUnreachable when none within max_d), found by
/// depth-first enumeration of closed walks.
struct ClosedWalkWeights {
    std::vector<Distance> vertex;
    std::vector<Distance> edge;
};
ClosedWalkWeights closed_walk_weights(const Graph& g, VertexId v, Distance max_d);

Ball ball_by_walk_enumeration(const Graph& g, VertexId v, Distance d);

/// Literal connectivity graph: xy is an edge iff x and y are joined by a path
/// in D_d(v_i) - v0 - v1 for some i. Balls come from walk enumeration unless
/// supplied.
ConnectivityGraph connectivity_graph_full(const Graph& g, VertexId v0, VertexId v1, Distance d);
ConnectivityGraph connectivity_graph_full(const Graph& g, VertexId v0, VertexId v1, Distance d,
                                          const Ball& ball0, const Ball& ball1);

struct Subdivision {
    Graph graph;
    /// For each vertex of `graph`: the original edge it subdivides, or -1 for
    /// original vertices (which keep their ids).
    std::vector<std::int64_t> origin_edge;
};

/// Replaces each edge of weight w by a path of w * (k + 1) unit edges.
Subdivision subdivide(const Graph& g, std::size_t k);

/// Articulation points: vertices whose removal increases the component count.
std::vector<VertexId> global_cutvertices(const Graph& g);

/// Pairs {u, v} whose removal leaves N({u, v}) in at least two components
/// (on connected graphs: G - u - v is disconnected).
std::vector<std::pair<VertexId, VertexId>> global_2cuts(const Graph& g);

/// All simple cycles of weight <= d, each as a vertex sequence starting at
/// its smallest vertex.
std::vector<std::vector<VertexId>> cycles_up_to(const Graph& g, Distance d);

/// True iff some cycle of weight <= d contains X and Y and alternates x, y, x', y'.
bool crossing_bruteforce(const Graph& g, Distance d, std::pair<VertexId, VertexId> x,
                         std::pair<VertexId, VertexId> y);

/// All pairs whose literal connectivity graph is disconnected, sorted.
std::vector<std::pair<VertexId, VertexId>> local_2separators_bruteforce(const Graph& g, Distance d);

/// Blocks of the classical block-cut decomposition: two edges share a block
/// iff no single vertex removal separates them. Each block is a sorted vertex
/// set; isolated vertices form singleton blocks. Sorted.
std::vector<std::vector<VertexId>> blocks_bruteforce(const Graph& g);

/// All-pairs weighted distances by Floyd-Warshall.
std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);

/// Weighted diameter of a connected graph (0 for n <= 1).
Distance diameter(const Graph& g);

}  // namespace localsep::oracle
