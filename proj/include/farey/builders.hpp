#pragma once

#include <set>
#include <vector>

#include "farey/fraction.hpp"
#include "farey/graph.hpp"
#include "farey/path.hpp"

namespace farey {

// The recursive halved construction. Order 0 is a single edge between the
// two root vertices (ids 0 and 1); each stage replaces every current-stage
// edge a-b by the two edges a-m, m-b through a fresh vertex labelled with
// the mediant of the endpoint labels. Edges of the newest stage are blue,
// all older edges black. stage_paths[j] is the path formed by the stage-j
// edges, which runs from root to root and covers every vertex present at
// stage j; new vertex ids are assigned along that sweep.
struct HalvedFarey {
  Graph graph;
  std::vector<Path> stage_paths;  // one per stage, 0..order
};

HalvedFarey build_halved_farey(int order);

// The full truncation: two halved copies glued along the root edge, the
// second grown from the root pair (0, 1), (-1, 0) so its interior labels
// are negative. Uncoloured; fully labelled; roots are ids 0 and 1.
Graph build_farey(int order);

// Vertices are the given fractions (ids 0.. in increasing fraction order),
// edges exactly the pairs spanning determinant 1.
Graph build_determinant_graph(const std::set<Fraction>& values);

// Two hub vertices labelled 0/1 (ids 0, 1) and three labelled 1/0
// (ids 2, 3, 4); each of the six hub pairs (one from each side) is joined
// by its own full-truncation copy of the given order, glued at the hubs.
Graph build_k23_with_farey_edges(int order);

// Deterministic nested mediant rows between two adjacent fractions:
// row j (1-based) is the label sequence obtained from (a, b) by j rounds of
// inserting mediants between consecutive entries. Rows are pairwise
// edge-disjoint a-b walks of the ambient structure and have length 2^j.
std::vector<std::vector<Fraction>> canonical_label_paths(const Fraction& a,
                                                         const Fraction& b,
                                                         int count);

// The first `count` canonical rows between the labels of u and v, resolved
// to vertices of g. Unlabelled or non-adjacent endpoints throw InputError;
// a row label missing from g throws SupplyError.
std::vector<Path> canonical_paths(const Graph& g, VertexId u, VertexId v,
                                  int count);

}  // namespace farey
