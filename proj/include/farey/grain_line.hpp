#pragma once

#include <string>
#include <vector>

#include "farey/graph.hpp"
#include "farey/path.hpp"

namespace farey {

// A finite stretch of a grain line: x-y paths P_0..P_{N-1} (all oriented
// from x to y) together with the ordered list of line vertices seen so far.
// start_index records how many earlier paths of the originating family were
// cut away (restrictions and drops bump it); indices in the conditions
// below always refer to positions within `paths`.
struct GrainLinePrefix {
  VertexId x;
  VertexId y;
  std::vector<VertexId> order;  // line vertices, in line order
  std::vector<Path> paths;
  int start_index = 0;
};

struct Condition {
  bool ok = true;
  std::string failure;  // empty when ok
};

// The report certifies a finite prefix only: passing all conditions means
// the family is consistent with being an initial stretch of a grain line,
// not that the completed infinite object exists.
struct PrefixReport {
  Condition shape;           // x-y paths, x != y, duplicate-free order
  Condition edge_disjoint;   // paths pairwise edge-disjoint
  Condition final_segment;   // each line vertex occupies a final segment of indices
  Condition single_use;      // non-line vertices lie on exactly one path
  Condition order_agreement; // each path orders previously-seen line vertices like the line
  Condition overlap;         // consecutive overlap is exactly the previously-seen line vertices
  std::string note;

  bool pass() const;
  std::string summary() const;
};

// Checks all six conditions; with an ambient graph, paths must also lie in
// it (reported under shape).
PrefixReport validate_prefix(const GrainLinePrefix& p,
                             const Graph* ambient = nullptr);

// True when every path from position `from_index` on meets `targets` in
// exactly the line's trace: the targets on the path are precisely the
// targets on the line, in line order.
bool grains(const GrainLinePrefix& p, int from_index, const VertexSet& targets);

// Pigeonhole extraction of a prefix from a supply of x-y paths.
// Runs `rounds` rounds; each round groups the pool by the trace of already
// -kept vertices, keeps the largest group (ties: least trace), chooses its
// earliest-input path, and drops the rest of the pool's other groups.
// Needs rounds + 1 <= supply size. The line order is read off the earliest
// surviving pool path, or off the last chosen path when the pool died at
// the very end; a pool death before the last round throws SupplyError.
struct ExtractResult {
  GrainLinePrefix prefix;
  std::vector<Path> residual;  // surviving pool, input order
};
ExtractResult extract(const std::vector<Path>& supply, int rounds);

// The sub-prefix between two line vertices lo, hi (lo before hi in line
// order): paths from the first position whose tail grains {lo, hi},
// truncated to their lo-hi subpaths; the line is sliced to [lo, hi] and
// start_index advanced by the cut. No such position: SupplyError.
GrainLinePrefix restrict_to(const GrainLinePrefix& p, VertexId lo, VertexId hi);

// Wild presentation: between any two previously-seen line vertices, every
// path strays through at least one line vertex strictly between them.
bool is_wildly_presented(const GrainLinePrefix& p);

// Greedy pass keeping each path that is wild over the line vertices seen on
// the paths kept so far; the line is then cut down to the vertices of the
// last kept path. A wildly presented input comes back unchanged.
GrainLinePrefix wild_subsequence(const GrainLinePrefix& p);

// Drops the first `count` paths (count < size), keeping the line and
// advancing start_index.
GrainLinePrefix drop_leading(const GrainLinePrefix& p, int count);

// The stage paths of a halved Farey build, read as a grain-line prefix
// between the two roots: the line is every vertex in ascending label order,
// and path n is the blue root-to-root sweep of stage n.
struct HalvedFarey;
GrainLinePrefix blue_hamilton_prefix(const HalvedFarey& built);

}  // namespace farey
