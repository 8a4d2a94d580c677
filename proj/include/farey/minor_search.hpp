#pragma once

#include <optional>

#include "farey/minor_map.hpp"

namespace farey {

inline constexpr int kMinorMaxPatternVertices = 6;
inline constexpr int kMinorMaxHostVertices = 48;

// Exact search for a minor model of `pattern` inside `host`, or nullopt
// when none exists. The pattern must be connected with 2 to 6 vertices
// (InputError otherwise); hosts above 48 vertices throw ResourceError, as
// does a search exceeding its internal node budget.
std::optional<MinorMap> find_minor(const Graph& host, const Graph& pattern);

}  // namespace farey
