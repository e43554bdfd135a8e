#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "localsep/graph.hpp"

namespace test {

using namespace localsep;

inline Graph make(std::size_t n, std::vector<EdgeInput> edges) { return Graph::from_edges(n, edges); }

/// Component partition as a set of sorted vertex sets, for order-free comparison.
template <class Nodes, class Labels>
std::set<std::vector<VertexId>> partition(const Nodes& nodes, const Labels& labels) {
    std::vector<std::vector<VertexId>> groups;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (labels[i] >= groups.size()) groups.resize(labels[i] + 1);
        groups[labels[i]].push_back(nodes[i]);
    }
    return {groups.begin(), groups.end()};
}

inline std::vector<EdgeId> edge_ids(const Graph& g, std::vector<std::pair<VertexId, VertexId>> pairs) {
    std::vector<EdgeId> out;
    for (auto [u, v] : pairs) out.push_back(*g.find_edge(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace test
