#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "farey/grain_line.hpp"
#include "farey/graph.hpp"
#include "farey/minor_map.hpp"
#include "farey/path.hpp"

namespace farey {

// A source of pairwise edge-disjoint u-v paths of length >= 2 inside a
// given graph. capacity() reports how many paths the supply can produce for
// the pair; paths() produces the first `count` of them (SupplyError when it
// cannot).
class PathSupply {
 public:
  virtual ~PathSupply() = default;
  virtual int capacity(const Graph& g, VertexId u, VertexId v) const = 0;
  virtual std::vector<Path> paths(const Graph& g, VertexId u, VertexId v,
                                  int count) const = 0;
};

// Nested mediant rows resolved through vertex labels. The supply of choice
// for labelled hosts: its rows cross the canonical separators coherently.
class CanonicalFareySupply : public PathSupply {
 public:
  int capacity(const Graph& g, VertexId u, VertexId v) const override;
  std::vector<Path> paths(const Graph& g, VertexId u, VertexId v,
                          int count) const override;
};

// Maximum-flow path decomposition. Generic but label-blind; its families
// need not cross a separator coherently, so it suits generic hosts and
// tests more than labelled ones.
class FlowPathSupply : public PathSupply {
 public:
  int capacity(const Graph& g, VertexId u, VertexId v) const override;
  std::vector<Path> paths(const Graph& g, VertexId u, VertexId v,
                          int count) const override;
};

// A fixed stock of paths; capacity counts the stock entries that are u-v
// paths of length >= 2 lying in the graph, and paths() returns them in
// stock order, oriented from u.
class StockSupply : public PathSupply {
 public:
  explicit StockSupply(std::vector<Path> stock) : stock_(std::move(stock)) {}
  int capacity(const Graph& g, VertexId u, VertexId v) const override;
  std::vector<Path> paths(const Graph& g, VertexId u, VertexId v,
                          int count) const override;

 private:
  std::vector<Path> stock_;
};

// One splitting step along an edge uv: extract a prefix from the supply,
// thin it to a wildly presented one, align it with the separator, take the
// first path as the spine, and cut the remaining paths into a u-side and a
// v-side family. Contracting the spine interior X in either side graph
// yields the two decorated sides.
struct SplitResult {
  Path spine;                 // P_0, oriented u -> v
  VertexSet x_set;            // interior of the spine
  VertexSet separator;        // separator the prefix grains
  VertexId s_u, s_v;          // first/last separator vertex along the spine
  VertexId x_u, x_v;          // extreme line vertices inside the spine
  GrainLinePrefix prefix_u;   // u -> x_u restrictions of the later paths
  GrainLinePrefix prefix_v;   // x_v -> v restrictions of the later paths
  Graph h_u;                  // spine plus u-side paths
  Graph h_v;                  // spine minus u, plus v-side paths
  Graph contracted_u;         // h_u with X contracted
  Graph contracted_v;         // h_v with X contracted
  VertexId x_vertex_u;        // merged vertex in contracted_u
  VertexId x_vertex_v;        // merged vertex in contracted_v
  MinorMap map_u;             // contraction model, host h_u
  MinorMap map_v;             // contraction model, host h_v
};

// Requires the edge uv in g and k >= 3. The supply is asked for k paths;
// the separator defaults to the minimum one between u and v in g - uv.
SplitResult split_step(const Graph& g, VertexId u, VertexId v,
                       const PathSupply& supply, int k,
                       const std::optional<VertexSet>& separator_override =
                           std::nullopt);

// Same step with the paths handed over directly.
SplitResult split_step_with_paths(const Graph& g, VertexId u, VertexId v,
                                  const std::vector<Path>& supplied,
                                  const std::optional<VertexSet>&
                                      separator_override = std::nullopt);

// Iterated splitting that rebuilds the halved structure level by level.
// Stage n holds the working graph G_n and its coloured core; each level
// splits every attachment sitting on a current blue edge, replaces the
// contracted interior by a fresh labelled vertex, and hands the side
// families down as the children's path stock. step_maps[n] is the minor
// model of G_{n+1) in G_n; final_map composes them and restricts to the
// final core. contractions records each fresh vertex's branch set in the
// original graph.
struct PipelineStage {
  Graph graph;
  Graph farey_part;
};

struct PipelineResult {
  std::vector<PipelineStage> stages;          // 0..depth
  std::vector<MinorMap> step_maps;            // one per level
  MinorMap final_map;                         // host -> final farey part
  std::map<VertexId, VertexSet> contractions; // fresh vertex -> branch set
};

// Requires the edge root_u-root_v in g. Per attachment the path budget is
// min(k, capacity); a budget below 3 throws SupplyError naming the level
// and edge.
PipelineResult foresighted_pipeline(const Graph& g, VertexId root_u,
                                    VertexId root_v, const PathSupply& supply,
                                    int depth, int k);

}  // namespace farey
