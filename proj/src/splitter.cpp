#include "farey/splitter.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/flow.hpp"
#include "farey/graph_ops.hpp"

namespace farey {
namespace {

constexpr int kCanonicalProbeLimit = 12;

std::string id_list(const VertexSet& vs) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (VertexId v : vs) {
    if (!first) out << ' ';
    first = false;
    out << v.value;
  }
  out << ']';
  return out.str();
}

std::string edge_name(VertexId a, VertexId b) {
  return std::to_string(a.value) + "-" + std::to_string(b.value);
}

}  // namespace

int CanonicalFareySupply::capacity(const Graph& g, VertexId u, VertexId v) const {
  int depth = 0;
  for (int j = 1; j <= kCanonicalProbeLimit; ++j) {
    try {
      paths(g, u, v, j);
    } catch (const Error&) {
      break;
    }
    depth = j;
  }
  return depth;
}

std::vector<Path> CanonicalFareySupply::paths(const Graph& g, VertexId u,
                                              VertexId v, int count) const {
  std::vector<Path> rows = canonical_paths(g, u, v, count);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (!rows[j].lies_in(g)) {
      throw SupplyError("canonical row " + std::to_string(j + 1) +
                        " misses an edge of the graph");
    }
  }
  return rows;
}

int FlowPathSupply::capacity(const Graph& g, VertexId u, VertexId v) const {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v) return 0;
  if (g.has_edge(u, v)) {
    return max_edge_disjoint_paths(without_edge(g, u, v), u, v).count;
  }
  return max_edge_disjoint_paths(g, u, v).count;
}

std::vector<Path> FlowPathSupply::paths(const Graph& g, VertexId u, VertexId v,
                                        int count) const {
  if (count < 0) throw InputError("path count must be non-negative");
  EdgeDisjointPaths all =
      g.has_edge(u, v) ? max_edge_disjoint_paths(without_edge(g, u, v), u, v)
                       : max_edge_disjoint_paths(g, u, v);
  if (static_cast<std::size_t>(count) > all.paths.size()) {
    throw SupplyError("flow supply offers " + std::to_string(all.paths.size()) +
                      " edge-disjoint paths between " + edge_name(u, v) +
                      ", asked for " + std::to_string(count));
  }
  all.paths.erase(all.paths.begin() + count, all.paths.end());
  return all.paths;
}

int StockSupply::capacity(const Graph& g, VertexId u, VertexId v) const {
  int usable = 0;
  for (const Path& p : stock_) {
    bool ends_match = (p.front() == u && p.back() == v) ||
                      (p.front() == v && p.back() == u);
    if (ends_match && p.length() >= 2 && p.lies_in(g)) usable += 1;
  }
  return usable;
}

std::vector<Path> StockSupply::paths(const Graph& g, VertexId u, VertexId v,
                                     int count) const {
  if (count < 0) throw InputError("path count must be non-negative");
  std::vector<Path> result;
  for (const Path& p : stock_) {
    if (static_cast<int>(result.size()) == count) break;
    bool ends_match = (p.front() == u && p.back() == v) ||
                      (p.front() == v && p.back() == u);
    if (!ends_match || p.length() < 2 || !p.lies_in(g)) continue;
    result.push_back(p.front() == u ? p : p.reversed());
  }
  if (static_cast<int>(result.size()) < count) {
    throw SupplyError("path stock holds " + std::to_string(result.size()) +
                      " usable paths between " + edge_name(u, v) +
                      ", asked for " + std::to_string(count));
  }
  return result;
}

SplitResult split_step_with_paths(const Graph& g, VertexId u, VertexId v,
                                  const std::vector<Path>& supplied,
                                  const std::optional<VertexSet>&
                                      separator_override) {
  if (!g.has_edge(u, v)) {
    throw InputError("splitting needs the edge " + edge_name(u, v));
  }
  if (supplied.size() < 3) {
    throw InputError("splitting needs at least three paths, got " +
                     std::to_string(supplied.size()));
  }

  std::vector<Path> oriented;
  oriented.reserve(supplied.size());
  std::set<Edge> used_edges;
  for (std::size_t i = 0; i < supplied.size(); ++i) {
    const Path& p = supplied[i];
    bool ends_match = (p.front() == u && p.back() == v) ||
                      (p.front() == v && p.back() == u);
    if (!ends_match) {
      throw SupplyError("supplied path " + std::to_string(i) +
                        " does not join " + edge_name(u, v));
    }
    if (p.length() < 2) {
      throw SupplyError("supplied path " + std::to_string(i) +
                        " is a bare edge; paths must have length at least 2");
    }
    if (!p.lies_in(g)) {
      throw SupplyError("supplied path " + std::to_string(i) +
                        " does not lie in the graph");
    }
    for (const Edge& e : p.edges()) {
      if (!used_edges.insert(e).second) {
        throw SupplyError("supplied paths are not edge-disjoint: edge " +
                          edge_name(e.a, e.b) + " repeats");
      }
    }
    oriented.push_back(p.front() == u ? p : p.reversed());
  }

  Graph w = without_edge(g, u, v);
  VertexSet separator;
  if (separator_override) {
    separator = *separator_override;
    if (separator.empty()) {
      throw InputError("separator override must not be empty");
    }
    for (VertexId s : separator) {
      if (!w.has_vertex(s) || s == u || s == v) {
        throw InputError("separator override contains an unusable vertex " +
                         std::to_string(s.value));
      }
    }
  } else {
    separator = min_vertex_separator(w, u, v);
    if (separator.empty()) {
      throw Error("no separator exists although connecting paths do");
    }
  }

  ExtractResult extracted =
      extract(oriented, static_cast<int>(oriented.size()) - 1);
  GrainLinePrefix wild = wild_subsequence(extracted.prefix);

  std::optional<std::size_t> grain_start;
  for (std::size_t d = 0; d < wild.paths.size(); ++d) {
    if (grains(wild, static_cast<int>(d), separator)) {
      grain_start = d;
      break;
    }
  }
  if (!grain_start) {
    throw GrainingError("no final run of the wild prefix grains the separator " +
                        id_list(separator));
  }
  GrainLinePrefix grained =
      drop_leading(wild, static_cast<int>(*grain_start));
  if (grained.paths.size() < 2) {
    throw SupplyError(
        "aligning with the separator " + id_list(separator) +
        " leaves a single path; splitting needs at least two");
  }

  SplitResult result{.spine = grained.paths.front(),
                     .x_set = {},
                     .separator = separator,
                     .s_u = {},
                     .s_v = {},
                     .x_u = {},
                     .x_v = {},
                     .prefix_u = {},
                     .prefix_v = {},
                     .h_u = {},
                     .h_v = {},
                     .contracted_u = {},
                     .contracted_v = {},
                     .x_vertex_u = {},
                     .x_vertex_v = {},
                     .map_u = {},
                     .map_v = {}};
  for (VertexId x : result.spine.interior()) result.x_set.insert(x);

  std::vector<VertexId> separator_on_spine;
  for (VertexId x : result.spine.vertices()) {
    if (separator.count(x)) separator_on_spine.push_back(x);
  }
  if (separator_on_spine.empty()) {
    throw InputError("the separator " + id_list(separator) +
                     " misses the spine; it does not separate " +
                     edge_name(u, v));
  }
  result.s_u = separator_on_spine.front();
  result.s_v = separator_on_spine.back();

  std::vector<VertexId> line_in_x;
  for (VertexId l : grained.order) {
    if (result.x_set.count(l)) line_in_x.push_back(l);
  }
  if (line_in_x.empty()) {
    throw Error("the spine interior carries no line vertex");
  }
  result.x_u = line_in_x.front();
  result.x_v = line_in_x.back();

  GrainLinePrefix rest = drop_leading(grained, 1);
  result.prefix_u = restrict_to(rest, u, result.x_u);
  result.prefix_v = restrict_to(rest, result.x_v, v);

  auto side_graph = [&g](const std::vector<Path>& paths) {
    Graph side;
    for (const Path& p : paths) {
      for (VertexId x : p.vertices()) {
        if (!side.has_vertex(x)) {
          side.add_vertex(x);
          if (g.has_label(x)) side.set_label(x, g.label(x));
        }
      }
      for (const Edge& e : p.edges()) {
        if (!side.has_edge(e.a, e.b)) side.add_edge(e.a, e.b);
      }
    }
    return side;
  };

  std::vector<Path> u_side_paths = result.prefix_u.paths;
  u_side_paths.push_back(result.spine);
  result.h_u = side_graph(u_side_paths);

  std::vector<Path> v_side_paths = result.prefix_v.paths;
  v_side_paths.push_back(result.spine.drop_front(1));
  result.h_v = side_graph(v_side_paths);

  Contraction cu = contract_set(result.h_u, result.x_set);
  Contraction cv = contract_set(result.h_v, result.x_set);
  result.contracted_u = std::move(cu.graph);
  result.contracted_v = std::move(cv.graph);
  result.x_vertex_u = cu.merged;
  result.x_vertex_v = cv.merged;
  result.map_u = std::move(cu.map);
  result.map_v = std::move(cv.map);
  return result;
}

SplitResult split_step(const Graph& g, VertexId u, VertexId v,
                       const PathSupply& supply, int k,
                       const std::optional<VertexSet>& separator_override) {
  if (!g.has_edge(u, v)) {
    throw InputError("splitting needs the edge " + edge_name(u, v));
  }
  if (k < 3) {
    throw InputError("splitting needs a path budget of at least 3, got " +
                     std::to_string(k));
  }
  return split_step_with_paths(g, u, v, supply.paths(g, u, v, k),
                               separator_override);
}

PipelineResult foresighted_pipeline(const Graph& g, VertexId root_u,
                                    VertexId root_v, const PathSupply& supply,
                                    int depth, int k) {
  if (!g.has_edge(root_u, root_v)) {
    throw InputError("the pipeline needs the root edge " +
                     edge_name(root_u, root_v));
  }
  if (depth < 0) throw InputError("depth must be non-negative");
  if (k < 3) {
    throw InputError("the pipeline needs a path budget of at least 3, got " +
                     std::to_string(k));
  }

  PipelineResult result;

  Graph core;
  core.add_vertex(root_u);
  core.add_vertex(root_v);
  if (g.has_label(root_u)) core.set_label(root_u, g.label(root_u));
  if (g.has_label(root_v)) core.set_label(root_v, g.label(root_v));
  core.add_edge(root_u, root_v);
  core.set_colour(root_u, root_v, EdgeColour::blue);
  result.stages.push_back(PipelineStage{g, core});

  std::map<Edge, Graph> attachments;
  std::map<Edge, std::vector<Path>> stocks;
  attachments.emplace(Edge(root_u, root_v), without_edge(g, root_u, root_v));

  int next_fresh = g.fresh_id().value;

  for (int level = 0; level < depth; ++level) {
    const Graph& farey_part = result.stages.back().farey_part;
    std::vector<Edge> blue_edges;
    for (const Edge& e : farey_part.edges()) {
      if (farey_part.colour(e.a, e.b) == EdgeColour::blue) {
        blue_edges.push_back(e);
      }
    }

    Graph next_farey = farey_part;
    next_farey.clear_colours();
    for (const Edge& e : next_farey.edges()) {
      next_farey.set_colour(e.a, e.b, EdgeColour::black);
    }

    std::map<Edge, Graph> next_attachments;
    std::map<Edge, std::vector<Path>> next_stocks;
    std::vector<Graph> union_parts;
    std::map<VertexId, VertexSet> fresh_sets;

    for (const Edge& e : blue_edges) {
      Graph a_plus = attachments.at(e);
      a_plus.add_edge(e.a, e.b);

      StockSupply inherited(level == 0 ? std::vector<Path>{}
                                       : stocks.at(e));
      const PathSupply& source =
          level == 0 ? supply : static_cast<const PathSupply&>(inherited);

      int capacity = source.capacity(a_plus, e.a, e.b);
      int budget = std::min(k, capacity);
      if (budget < 3) {
        throw SupplyError("level " + std::to_string(level) + ", edge " +
                          edge_name(e.a, e.b) + ": the supply funds only " +
                          std::to_string(capacity) +
                          " paths, and a split needs 3; completed " +
                          std::to_string(level) + " of " +
                          std::to_string(depth) + " levels");
      }

      SplitResult split = split_step(a_plus, e.a, e.b, source, budget);

      VertexId ve{next_fresh};
      next_fresh += 1;

      Graph side_u = renamed(split.contracted_u, split.x_vertex_u, ve);
      Graph side_v = renamed(split.contracted_v, split.x_vertex_v, ve);

      next_farey.add_vertex(ve);
      if (next_farey.has_label(e.a) && next_farey.has_label(e.b) &&
          next_farey.label(e.a) != next_farey.label(e.b) &&
          farey_adjacent(next_farey.label(e.a), next_farey.label(e.b))) {
        Fraction fresh_label =
            mediant(next_farey.label(e.a), next_farey.label(e.b));
        next_farey.set_label(ve, fresh_label);
        side_u.set_label(ve, fresh_label);
        side_v.set_label(ve, fresh_label);
      }
      next_farey.add_edge(e.a, ve);
      next_farey.set_colour(e.a, ve, EdgeColour::blue);
      next_farey.add_edge(ve, e.b);
      next_farey.set_colour(ve, e.b, EdgeColour::blue);

      std::vector<Path> stock_u;
      for (const Path& p : split.prefix_u.paths) {
        std::vector<VertexId> ids = p.vertices();
        ids.back() = ve;
        if (ids.size() >= 3) stock_u.emplace_back(std::move(ids));
      }
      std::vector<Path> stock_v;
      for (const Path& p : split.prefix_v.paths) {
        std::vector<VertexId> ids = p.vertices();
        ids.front() = ve;
        if (ids.size() >= 3) stock_v.emplace_back(std::move(ids));
      }

      next_attachments.emplace(Edge(e.a, ve), without_edge(side_u, e.a, ve));
      next_attachments.emplace(Edge(ve, e.b), without_edge(side_v, ve, e.b));
      next_stocks.emplace(Edge(e.a, ve), std::move(stock_u));
      next_stocks.emplace(Edge(ve, e.b), std::move(stock_v));

      union_parts.push_back(std::move(side_u));
      union_parts.push_back(std::move(side_v));
      fresh_sets.emplace(ve, split.x_set);
      result.contractions.emplace(ve, split.x_set);
    }

    Graph next_graph = next_farey;
    for (const Graph& part : union_parts) {
      next_graph = graph_union(next_graph, part);
    }

    MinorMap step;
    step.host = result.stages.back().graph;
    step.pattern = next_graph;
    std::set<VertexId> fresh_here;
    for (const auto& [ve, x] : fresh_sets) fresh_here.insert(ve);
    for (VertexId w : next_graph.vertices()) {
      if (fresh_here.count(w)) continue;
      step.carrier.insert(w);
      step.assignment.emplace(w, w);
    }
    for (const auto& [ve, x] : fresh_sets) {
      for (VertexId w : x) {
        step.carrier.insert(w);
        step.assignment.emplace(w, ve);
      }
    }
    result.step_maps.push_back(std::move(step));

    result.stages.push_back(
        PipelineStage{std::move(next_graph), std::move(next_farey)});
    attachments = std::move(next_attachments);
    stocks = std::move(next_stocks);
  }

  VertexSet final_core;
  for (VertexId w : result.stages.back().farey_part.vertices()) {
    final_core.insert(w);
  }
  if (result.step_maps.empty()) {
    result.final_map = restrict_pattern(MinorMap::identity(g), final_core);
  } else {
    MinorMap composed = result.step_maps.front();
    for (std::size_t i = 1; i < result.step_maps.size(); ++i) {
      composed = compose(composed, result.step_maps[i]);
    }
    result.final_map = restrict_pattern(composed, final_core);
  }
  return result;
}

}  // namespace farey
