#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

// A vertex handle. Plain integer identity; ordering makes deterministic
// iteration trivial everywhere.
struct VertexId {
  int value = -1;
  auto operator<=>(const VertexId&) const = default;
};

// An undirected edge, stored with endpoints in increasing order. Loops are
// rejected at construction.
struct Edge {
  Edge(VertexId a, VertexId b);
  VertexId a;  // smaller endpoint
  VertexId b;  // larger endpoint
  auto operator<=>(const Edge&) const = default;
};

enum class EdgeColour { blue, black };

using VertexSet = std::set<VertexId>;

// A finite simple undirected graph with optional fraction labels on
// vertices and optional colours on edges. All iteration orders are
// deterministic (ordered containers throughout).
class Graph {
 public:
  Graph() = default;

  bool operator==(const Graph&) const = default;

  // Adds a fresh vertex (smallest unused non-negative id) and returns it.
  VertexId add_vertex();
  // Adds a specific vertex id; idempotent.
  void add_vertex(VertexId v);
  // Adds an edge; both endpoints must already exist. Idempotent.
  void add_edge(VertexId u, VertexId v);
  // Removes an edge (and its colour) if present.
  void remove_edge(VertexId u, VertexId v);
  // Removes a vertex together with its incident edges, label and colours.
  void remove_vertex(VertexId v);

  void set_label(VertexId v, const Fraction& label);
  void set_colour(VertexId u, VertexId v, EdgeColour colour);
  void clear_colours();

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  bool has_label(VertexId v) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const VertexSet& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  const VertexSet& neighbours(VertexId v) const;

  Fraction label(VertexId v) const;                      // throws if absent
  std::optional<EdgeColour> colour(VertexId u, VertexId v) const;
  const std::map<VertexId, Fraction>& labels() const { return labels_; }
  const std::map<Edge, EdgeColour>& colours() const { return colours_; }

  // The unique vertex carrying `label`, nullopt if none. Throws InputError
  // if several vertices share it.
  std::optional<VertexId> vertex_with_label(const Fraction& label) const;

  // An id strictly larger than every existing vertex id (0 on empty).
  VertexId fresh_id() const;

  // True when every edge has a colour.
  bool fully_coloured() const;

 private:
  VertexSet vertices_;
  std::set<Edge> edges_;
  std::map<VertexId, VertexSet> adj_;
  std::map<VertexId, Fraction> labels_;
  std::map<Edge, EdgeColour> colours_;
};

}  // namespace farey
