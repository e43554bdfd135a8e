#pragma once

#include <span>
#include <vector>

#include "localsep/graph.hpp"

namespace localsep {

/// All d-local cutvertices: vertices v whose punctured ball D_d(v) - v is
/// nonempty and disconnected. Sorted; independent of `jobs` (0 = all cores).
std::vector<VertexId> find_local_cutvertices(const Graph& g, Distance d, unsigned jobs = 0);

/// Single-vertex form of the test above.
bool is_local_cutvertex(const Graph& g, VertexId v, Distance d);

/// Clusters: connected components of G minus every given cutvertex.
VertexPartition local_blocks(const Graph& g, std::span<const VertexId> cutvertices);

}  // namespace localsep
