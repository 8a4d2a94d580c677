#pragma once

#include <map>
#include <string>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

// A minor model: `assignment` maps a subset of host vertices (the carrier)
// onto pattern vertices. The preimage of a pattern vertex is its branch set
// (fibre). Host vertices outside the carrier are deleted by the model.
struct MinorMap {
  Graph host;
  Graph pattern;
  VertexSet carrier;
  std::map<VertexId, VertexId> assignment;

  static MinorMap identity(const Graph& g);

  // Branch set of a pattern vertex (empty set if nothing maps there).
  VertexSet fibre(VertexId pattern_vertex) const;
};

struct MinorMapReport {
  bool pass = true;
  std::vector<std::string> issues;
};

// Checks the minor-model axioms: carrier is a subset of the host vertices,
// assignment keys equal the carrier, every pattern vertex has a non-empty
// connected branch set, and every pattern edge is realized by a host edge
// between the two branch sets.
MinorMapReport validate(const MinorMap& m);

// Apply `phi` then `psi`. Requires phi.pattern and psi.host to be equal
// graphs (same vertices, edges, labels, colours); throws InputError
// otherwise or when either input fails validation.
MinorMap compose(const MinorMap& phi, const MinorMap& psi);

// Shrink the pattern to an induced subgraph on `keep`, dropping the part of
// the carrier that mapped elsewhere.
MinorMap restrict_pattern(const MinorMap& m, const VertexSet& keep);

// The halved graph of the given order contains the full graph of the
// previous order as a minor: merge the two root vertices into one. Returns
// the verified model (pattern is the full graph of order `order` - 1)
// together with that order offset.
struct WitnessResult {
  MinorMap map;
  int offset;
};
WitnessResult halved_contains_full_witness(int order);

}  // namespace farey
