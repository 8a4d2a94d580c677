#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

// A simple path given by its vertex sequence: non-empty, no repeated
// vertices. A single vertex is a (trivial) path with no edges.
class Path {
 public:
  explicit Path(std::vector<VertexId> vertices);

  bool operator==(const Path&) const = default;

  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }
  std::size_t size() const { return vertices_.size(); }     // vertex count
  std::size_t length() const { return vertices_.size() - 1; }  // edge count

  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool contains(VertexId v) const;
  // Index of v in the sequence; nullopt if absent.
  std::optional<std::size_t> position(VertexId v) const;

  // Interior vertices (everything but the two ends).
  std::vector<VertexId> interior() const;
  std::vector<Edge> edges() const;

  // The subpath between two contained vertices, inclusive, oriented from
  // `from` to `to` as they appear along this path (reversed if needed so
  // the result starts at `from`). Throws InputError if either is absent.
  Path subpath(VertexId from, VertexId to) const;

  Path drop_front(std::size_t count) const;
  Path drop_back(std::size_t count) const;
  Path reversed() const;

  // True when every vertex and every step of the path exists in g.
  bool lies_in(const Graph& g) const;

 private:
  std::vector<VertexId> vertices_;
};

// For two paths sharing both endpoints (in either orientation): a copy of
// `q` oriented to start where `p` starts. Throws InputError if the endpoint
// sets differ.
Path oriented_like(const Path& p, const Path& q);

}  // namespace farey
