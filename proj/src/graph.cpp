#include "farey/graph.hpp"

#include <algorithm>
#include <string>

#include "farey/errors.hpp"

namespace farey {

Edge::Edge(VertexId x, VertexId y) {
  if (x == y) {
    throw InputError("loop edge at vertex " + std::to_string(x.value));
  }
  a = std::min(x, y);
  b = std::max(x, y);
}

VertexId Graph::add_vertex() {
  VertexId v = fresh_id();
  add_vertex(v);
  return v;
}

void Graph::add_vertex(VertexId v) {
  vertices_.insert(v);
  adj_.try_emplace(v);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InputError("edge endpoint does not exist: " + std::to_string(u.value) +
                     "-" + std::to_string(v.value));
  }
  Edge e(u, v);
  edges_.insert(e);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  Edge e(u, v);
  edges_.erase(e);
  colours_.erase(e);
  if (auto it = adj_.find(u); it != adj_.end()) it->second.erase(v);
  if (auto it = adj_.find(v); it != adj_.end()) it->second.erase(u);
}

void Graph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) return;
  // Copy: remove_edge mutates the adjacency set we would be iterating.
  VertexSet nbrs = adj_[v];
  for (VertexId w : nbrs) remove_edge(v, w);
  vertices_.erase(v);
  adj_.erase(v);
  labels_.erase(v);
}

void Graph::set_label(VertexId v, const Fraction& label) {
  if (!has_vertex(v)) {
    throw InputError("cannot label missing vertex " + std::to_string(v.value));
  }
  labels_.insert_or_assign(v, label);
}

void Graph::set_colour(VertexId u, VertexId v, EdgeColour colour) {
  Edge e(u, v);
  if (!edges_.contains(e)) {
    throw InputError("cannot colour missing edge " + std::to_string(u.value) +
                     "-" + std::to_string(v.value));
  }
  colours_.insert_or_assign(e, colour);
}

void Graph::clear_colours() { colours_.clear(); }

bool Graph::has_vertex(VertexId v) const { return vertices_.contains(v); }

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  return edges_.contains(Edge(u, v));
}

bool Graph::has_label(VertexId v) const { return labels_.contains(v); }

const VertexSet& Graph::neighbours(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw InputError("no such vertex " + std::to_string(v.value));
  }
  return it->second;
}

Fraction Graph::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) {
    throw InputError("vertex " + std::to_string(v.value) + " has no label");
  }
  return it->second;
}

std::optional<EdgeColour> Graph::colour(VertexId u, VertexId v) const {
  auto it = colours_.find(Edge(u, v));
  if (it == colours_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> Graph::vertex_with_label(const Fraction& label) const {
  std::optional<VertexId> found;
  for (const auto& [v, f] : labels_) {
    if (f == label) {
      if (found) {
        throw InputError("label " + label.str() + " is ambiguous");
      }
      found = v;
    }
  }
  return found;
}

VertexId Graph::fresh_id() const {
  if (vertices_.empty()) return VertexId{0};
  return VertexId{vertices_.rbegin()->value + 1};
}

bool Graph::fully_coloured() const {
  return colours_.size() == edges_.size();
}

}  // namespace farey
