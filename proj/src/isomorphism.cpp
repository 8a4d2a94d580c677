#include "farey/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "farey/errors.hpp"

namespace farey {
namespace {

int colour_code(const Graph& g, VertexId a, VertexId b) {
  auto c = g.colour(a, b);
  if (!c) return 0;
  return *c == EdgeColour::blue ? 1 : 2;
}

// One refinement sweep over both graphs jointly; returns the new colouring
// and the number of colour classes.
struct Refinement {
  std::map<VertexId, int> g_colour;
  std::map<VertexId, int> h_colour;
  int classes = 0;
};

Refinement refine(const Graph& g, const Graph& h, bool respect_colours) {
  Refinement current;
  {
    // Initial colour: degree, plus the sorted incident colour codes when
    // colours matter.
    std::map<std::vector<int>, int> ids;
    auto initial = [&](const Graph& graph, VertexId v) {
      std::vector<int> sig{static_cast<int>(graph.neighbours(v).size())};
      if (respect_colours) {
        std::vector<int> codes;
        for (VertexId w : graph.neighbours(v)) {
          codes.push_back(colour_code(graph, v, w));
        }
        std::sort(codes.begin(), codes.end());
        sig.insert(sig.end(), codes.begin(), codes.end());
      }
      auto [it, fresh] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      (void)fresh;
      return it->second;
    };
    for (VertexId v : g.vertices()) current.g_colour[v] = initial(g, v);
    for (VertexId v : h.vertices()) current.h_colour[v] = initial(h, v);
    current.classes = static_cast<int>(ids.size());
  }

  for (;;) {
    std::map<std::vector<int>, int> ids;
    Refinement next;
    auto step = [&](const Graph& graph, const std::map<VertexId, int>& colour,
                    VertexId v) {
      std::vector<int> sig{colour.at(v)};
      std::vector<std::vector<int>> nbrs;
      for (VertexId w : graph.neighbours(v)) {
        std::vector<int> item{colour.at(w)};
        if (respect_colours) item.push_back(colour_code(graph, v, w));
        nbrs.push_back(std::move(item));
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (auto& item : nbrs) {
        sig.insert(sig.end(), item.begin(), item.end());
        sig.push_back(-1);  // separator
      }
      auto [it, fresh] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      (void)fresh;
      return it->second;
    };
    for (VertexId v : g.vertices()) next.g_colour[v] = step(g, current.g_colour, v);
    for (VertexId v : h.vertices()) next.h_colour[v] = step(h, current.h_colour, v);
    next.classes = static_cast<int>(ids.size());
    if (next.classes == current.classes) return current;
    current = std::move(next);
  }
}

}  // namespace

std::optional<std::map<VertexId, VertexId>> iso_check(const Graph& g,
                                                      const Graph& h,
                                                      bool respect_colours) {
  if (g.vertex_count() > kIsoMaxVertices || h.vertex_count() > kIsoMaxVertices) {
    throw ResourceError("isomorphism check limited to " +
                        std::to_string(kIsoMaxVertices) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }

  Refinement refined = refine(g, h, respect_colours);

  // The two graphs must populate every colour class equally.
  std::map<int, int> balance;
  for (const auto& [v, c] : refined.g_colour) {
    (void)v;
    balance[c] += 1;
  }
  for (const auto& [v, c] : refined.h_colour) {
    (void)v;
    balance[c] -= 1;
  }
  for (const auto& [c, count] : balance) {
    (void)c;
    if (count != 0) return std::nullopt;
  }

  std::map<int, std::vector<VertexId>> h_by_colour;
  for (const auto& [v, c] : refined.h_colour) h_by_colour[c].push_back(v);

  // Most constrained first: small classes, then colour, then id.
  std::vector<VertexId> order;
  for (const auto& [v, c] : refined.g_colour) {
    (void)c;
    order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    auto key = [&](VertexId v) {
      int c = refined.g_colour.at(v);
      return std::tuple(static_cast<int>(h_by_colour[c].size()), c, v.value);
    };
    return key(a) < key(b);
  });

  std::map<VertexId, VertexId> mapping;
  std::set<VertexId> used;

  auto consistent = [&](VertexId gv, VertexId hv) {
    for (const auto& [a, b] : mapping) {
      bool ge = g.has_edge(a, gv);
      bool he = h.has_edge(b, hv);
      if (ge != he) return false;
      if (ge && respect_colours &&
          colour_code(g, a, gv) != colour_code(h, b, hv)) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    VertexId gv = order[depth];
    for (VertexId hv : h_by_colour[refined.g_colour.at(gv)]) {
      if (used.contains(hv) || !consistent(gv, hv)) continue;
      mapping[gv] = hv;
      used.insert(hv);
      if (self(self, depth + 1)) return true;
      mapping.erase(gv);
      used.erase(hv);
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return mapping;
}

}  // namespace farey
