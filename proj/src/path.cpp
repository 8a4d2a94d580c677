#include "farey/path.hpp"

#include <algorithm>
#include <set>

#include "farey/errors.hpp"

namespace farey {

Path::Path(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw InputError("a path needs at least one vertex");
  }
  std::set<VertexId> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) {
    throw InputError("a path must not repeat vertices");
  }
}

bool Path::contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::optional<std::size_t> Path::position(VertexId v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<VertexId> Path::interior() const {
  if (vertices_.size() <= 2) return {};
  return {vertices_.begin() + 1, vertices_.end() - 1};
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> result;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    result.emplace_back(vertices_[i], vertices_[i + 1]);
  }
  return result;
}

Path Path::subpath(VertexId from, VertexId to) const {
  auto i = position(from);
  auto j = position(to);
  if (!i || !j) {
    throw InputError("subpath endpoints must lie on the path");
  }
  if (*i <= *j) {
    return Path({vertices_.begin() + *i, vertices_.begin() + *j + 1});
  }
  std::vector<VertexId> part(vertices_.begin() + *j, vertices_.begin() + *i + 1);
  std::reverse(part.begin(), part.end());
  return Path(std::move(part));
}

Path Path::drop_front(std::size_t count) const {
  if (count >= vertices_.size()) {
    throw InputError("cannot drop every vertex of a path");
  }
  return Path({vertices_.begin() + count, vertices_.end()});
}

Path Path::drop_back(std::size_t count) const {
  if (count >= vertices_.size()) {
    throw InputError("cannot drop every vertex of a path");
  }
  return Path({vertices_.begin(), vertices_.end() - count});
}

Path Path::reversed() const {
  std::vector<VertexId> copy(vertices_.rbegin(), vertices_.rend());
  return Path(std::move(copy));
}

bool Path::lies_in(const Graph& g) const {
  for (VertexId v : vertices_) {
    if (!g.has_vertex(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!g.has_edge(vertices_[i], vertices_[i + 1])) return false;
  }
  return true;
}

Path oriented_like(const Path& p, const Path& q) {
  if (p.front() == q.front() && p.back() == q.back()) return q;
  if (p.front() == q.back() && p.back() == q.front()) return q.reversed();
  throw InputError("paths do not share their endpoints");
}

}  // namespace farey
