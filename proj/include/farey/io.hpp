#pragma once

#include <string>
#include <vector>

#include "farey/grain_line.hpp"
#include "farey/graph.hpp"
#include "farey/path.hpp"
#include "farey/splitter.hpp"

namespace farey {

// Vertex tokens: the vertex's label ("1/2") when it has one that is unique
// in the graph, otherwise its id ("7"). Parsing accepts both forms.
std::string vertex_token(const Graph& g, VertexId v);
VertexId parse_vertex_token(const Graph& g, const std::string& token);

// farey-graph/1: {format, metadata{provenance}, vertices[{id, label?}],
// edges[{u, v, colour?}]}, two-space indented, keys and rows in fixed
// order. parse_graph_json reports malformed JSON as ParseError with line
// and column, and schema violations as InputError.
std::string emit_graph_json(const Graph& g, const std::string& provenance = "");
Graph parse_graph_json(const std::string& text);

// path-list/1: {format, paths[[token...]...]}.
std::string emit_path_list_json(const Graph& g, const std::vector<Path>& paths);
std::vector<Path> parse_path_list_json(const Graph& g, const std::string& text);

// grain-prefix/1: {format, x, y, start_index, order[token...],
// paths[[token...]...]}.
std::string emit_prefix_json(const Graph& g, const GrainLinePrefix& p);
GrainLinePrefix parse_prefix_json(const Graph& g, const std::string& text);

// split-result/1: spine, separator, interior, corner vertices, both side
// prefixes and the four side graphs, tokens resolved against g.
std::string emit_split_json(const Graph& g, const SplitResult& r);

// Graphviz text; vertices carry labels, blue edges carry color=blue.
std::string emit_dot(const Graph& g);

// Deterministic SVG. Fully labelled graphs sit on a semicircle in label
// order when no label is negative, otherwise on a full circle starting at
// 1/0; unlabelled graphs sit on a circle in id order. Edges are drawn as
// circular arcs meeting the layout circle at right angles (the geodesics of
// the disc model); near-diameters fall back to chords.
std::string emit_svg_circle(const Graph& g, bool hyperbolic_arcs = true);

}  // namespace farey
