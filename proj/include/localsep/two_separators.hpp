#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "localsep/graph.hpp"

namespace localsep {

/// C_d(v0, v1, G) in simplified form: the node set is N({v0, v1}); edges are
/// stars over each component of D_d(v_i) - v0 - v1, which yields the same
/// component partition as the full definition with far fewer edges.
struct ConnectivityGraph {
    VertexId v0 = 0;
    VertexId v1 = 0;
    Distance d = 0;
    std::vector<VertexId> nodes;                         // sorted
    std::vector<std::pair<VertexId, VertexId>> edges;    // over `nodes`, by vertex id
    std::vector<std::uint32_t> component;                // parallel to `nodes`
    std::uint32_t component_count = 0;

    bool disconnected() const { return component_count >= 2; }
    /// Component of a node, numbered by smallest member. Throws if not a node.
    std::uint32_t component_of(VertexId x) const;
};

enum class Verdict : std::uint8_t {
    NestedByEdge,            // v0 v1 is an edge of G
    NestedByManyComponents,  // three or more local components
    Cycle,                   // witnessing cycle of weight <= d
    Unresolved,              // no witnessing cycle exists within the budget
};

std::string_view to_string(Verdict v);

struct CycleData {
    Verdict verdict = Verdict::NestedByEdge;
    /// For Verdict::Cycle: v0, then the first component's side up to v1, then
    /// the second component's side. Empty otherwise.
    std::vector<VertexId> cycle;
};

struct SeparatorRecord {
    VertexId v0 = 0;  // v0 < v1
    VertexId v1 = 0;
    CycleData cycle_data;
    bool nested = false;
};

/// Throws PreconditionError when v0 == v1 or 2 dist(v0, v1) > d.
ConnectivityGraph connectivity_graph(const Graph& g, VertexId v0, VertexId v1, Distance d);

/// Throws PreconditionError if `c` is connected and DataIntegrityError when
/// no cycle of weight <= d through both local components exists.
CycleData cycle_data(const Graph& g, VertexId v0, VertexId v1, Distance d,
                     const ConnectivityGraph& c);

/// Every d-local 2-separator with cycle data, sorted by (v0, v1). Pairs
/// whose witnessing cycle cannot be built are reported as Unresolved rather
/// than aborting the whole enumeration. Requires d >= 2.
std::vector<SeparatorRecord> find_local_2separators(const Graph& g, Distance d,
                                                    unsigned jobs = 0);

/// Marks each record totally nested or not, following the pair-lookup test:
/// edge and many-component verdicts are nested; a cycle verdict is nested iff
/// no listed pair has one vertex inside each of the cycle's two v0-v1 sides.
/// Unresolved records are never marked nested.
std::vector<SeparatorRecord> filter_totally_nested(std::vector<SeparatorRecord> records,
                                                   unsigned jobs = 0);

/// Records whose nested flag is set.
std::vector<SeparatorRecord> nested_only(std::span<const SeparatorRecord> records);

}  // namespace localsep
