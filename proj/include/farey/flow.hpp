#pragma once

#include <vector>

#include "farey/graph.hpp"
#include "farey/path.hpp"

namespace farey {

// A maximum family of pairwise edge-disjoint x-y paths, computed by
// augmenting unit flows and decomposing the result deterministically.
struct EdgeDisjointPaths {
  int count = 0;
  std::vector<Path> paths;
};
EdgeDisjointPaths max_edge_disjoint_paths(const Graph& g, VertexId x, VertexId y);

// A minimum vertex set separating u from v (u, v excluded), for
// non-adjacent distinct u, v. Deterministic: always the cut closest to u
// (the residual-reachable side of a maximum vertex-capacity flow), which is
// independent of the augmentation order.
VertexSet min_vertex_separator(const Graph& g, VertexId u, VertexId v);

}  // namespace farey
