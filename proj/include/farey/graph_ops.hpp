#pragma once

#include <map>

#include "farey/graph.hpp"
#include "farey/minor_map.hpp"

namespace farey {

// The subgraph induced on `keep` (labels and colours restricted with it).
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// True when every vertex of `within` can reach every other through vertices
// of `within` only. Vacuously true for the empty set.
bool is_connected_in(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g);

// Contracting a connected vertex set X to a single fresh vertex.
// The result is a simple graph (parallel edges merge); labels survive on
// the untouched vertices, the merged vertex is unlabelled, and edge colours
// are dropped (colours belong to the recursive builders only). `map` is the
// minor model with host g and pattern `graph`.
struct Contraction {
  Graph graph;
  MinorMap map;
  VertexId merged;
};
Contraction contract_set(const Graph& g, const VertexSet& x);

// Every edge replaced by a two-edge path through a fresh vertex. Labels
// survive on the original vertices; colours are dropped. `midpoints` maps
// each original edge to its subdivision vertex.
struct Subdivision {
  Graph graph;
  std::map<Edge, VertexId> midpoints;
};
Subdivision subdivide_edges(const Graph& g);

// Union of vertices and edges. Labels merge; two different labels on the
// same vertex throw InputError. Colours are dropped.
Graph graph_union(const Graph& a, const Graph& b);

// A copy without the edge uv; the edge must exist.
Graph without_edge(const Graph& g, VertexId u, VertexId v);

// A copy with vertex `from` renamed to `to` (label and incident edges,
// colours included). `to` must not already exist; renaming to itself is a
// no-op.
Graph renamed(const Graph& g, VertexId from, VertexId to);

}  // namespace farey
