#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "localsep/graph.hpp"

namespace localsep {

struct NodeRecord {
    std::string id;
    std::optional<Point> position;
};

struct EdgeRecord {
    std::string source;
    std::string target;
    std::optional<double> weight;
};

struct BuildReport {
    /// Edges whose scaled length rounded below 1 and were clamped to weight 1.
    std::size_t clamped_weights = 0;
};

/// round-half-up(scale * length), never below 1.
Weight scaled_weight(double length, double scale, BuildReport* report = nullptr);

/// Builds a graph from raw tables. Vertex order follows the node table, or
/// first appearance in the edge table when `nodes` is empty. An explicit edge
/// weight wins; otherwise the Euclidean length of the endpoints is used when
/// coordinates exist, else 1. All lengths go through scaled_weight.
/// Throws InputError on unknown endpoints, loops, or parallel edges.
Graph build_graph(std::span<const NodeRecord> nodes, std::span<const EdgeRecord> edges,
                  double scale, BuildReport* report = nullptr);

/// build_graph restricted to coordinate-derived weights.
Graph euclidean_weights(std::span<const NodeRecord> nodes, std::span<const EdgeRecord> edges,
                        double scale, BuildReport* report = nullptr);

/// Deletes degree-1 vertices until none remain.
Graph prune_degree_one(const Graph& g);

/// Replaces each maximal chain of degree-2 vertices by one edge carrying the
/// chain's total weight. Where that would create a loop or a parallel edge,
/// the chain keeps one (parallel) or two (loop) interior vertices instead;
/// a component that is a bare cycle shrinks to a triangle.
Graph suppress_degree_two(const Graph& g);

struct SweepRow {
    Distance d = 0;
    std::size_t cutvertices = 0;
    std::size_t clusters = 0;
    std::size_t largest_cluster = 0;
};

std::vector<SweepRow> sweep_d(const Graph& g, std::span<const Distance> d_values, unsigned jobs = 0);

}  // namespace localsep
