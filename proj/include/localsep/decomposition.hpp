#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "localsep/graph.hpp"
#include "localsep/two_separators.hpp"

namespace localsep {

enum class NodeKind : std::uint8_t { Bag, Separator };

struct DecompositionNode {
    NodeKind kind = NodeKind::Bag;
    std::vector<VertexId> vertices;   // sorted
    std::optional<Point> centroid;    // mean coordinate when the graph has coordinates
};

struct DecompositionEdge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    /// Number of original incidences merged into this edge by suppression.
    std::uint32_t multiplicity = 1;
};

/// Bipartite graph of bag-nodes and separator-nodes. Bags come first in
/// `nodes`, then separators; both groups are sorted by vertex set. After
/// suppress_degree_two_nodes the graph is `simplified` and may contain
/// bag-bag edges.
struct DecompositionGraph {
    std::vector<DecompositionNode> nodes;
    std::vector<DecompositionEdge> edges;  // sorted by (a, b), a < b
    bool simplified = false;

    std::size_t bag_count() const;
    std::size_t separator_count() const { return nodes.size() - bag_count(); }
    std::vector<std::vector<std::uint32_t>> adjacency() const;
};

/// Adhesion-one decomposition from d-local cutvertices. Each cutvertex is
/// split into one copy per local component of its punctured ball; bags are the
/// connected pieces of the split graph, so for saturated d this is exactly the
/// block-cut tree.
DecompositionGraph build_from_cutvertices(const Graph& g, Distance d,
                                          std::span<const VertexId> cutvertices);

/// Adhesion-two decomposition from totally nested d-local 2-separators.
/// Every separator vertex is split by the common refinement of the local
/// components of all nested pairs containing it; an edge joining the two
/// vertices of a nested pair belongs to that separator, not to a bag.
/// Local 2-connectivity of `g` is assumed, not checked.
DecompositionGraph build_from_2separators(const Graph& g, Distance d,
                                          std::span<const SeparatorRecord> nested);

/// Replaces every separator-node of degree two by a direct edge between its
/// two bags. Bag-nodes are kept; parallel edges are merged and counted.
DecompositionGraph suppress_degree_two_nodes(const DecompositionGraph& dg);

struct DecompositionStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t bag_count = 0;
    std::size_t separator_count = 0;
    std::size_t largest_bag = 0;
    std::map<std::size_t, std::size_t> bag_size_histogram;
};

DecompositionStats stats(const DecompositionGraph& dg);

}  // namespace localsep
