#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "farey/graph.hpp"

namespace farey {

inline constexpr std::size_t kIsoMaxVertices = 200;

// An isomorphism g -> h as a vertex map, or nullopt. Vertex labels are
// ignored; with respect_colours the map must also preserve edge colours
// (including their absence). Graphs above kIsoMaxVertices vertices throw
// ResourceError.
std::optional<std::map<VertexId, VertexId>> iso_check(const Graph& g,
                                                      const Graph& h,
                                                      bool respect_colours = false);

}  // namespace farey
