#include "farey/minor_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "farey/errors.hpp"
#include "farey/graph_ops.hpp"

namespace farey {
namespace {

constexpr long long kNodeBudget = 50'000'000;
constexpr long long kEmbedBudget = 2'000'000;

// Fast path: look for the pattern as a plain subgraph (all branch sets
// singletons). Sound for presence only — a miss or an exhausted budget says
// nothing, and the caller falls through to the exhaustive search. Pattern
// vertices are placed most-constrained first so host candidates can be read
// off a placed neighbour's adjacency list.
std::optional<MinorMap> embed_as_subgraph(const Graph& host,
                                          const Graph& pattern) {
  std::vector<VertexId> order;
  {
    std::set<VertexId> placed;
    while (order.size() < pattern.vertex_count()) {
      bool have = false;
      VertexId best{-1};
      std::pair<std::size_t, std::size_t> best_key{0, 0};
      for (VertexId v : pattern.vertices()) {
        if (placed.contains(v)) continue;
        std::size_t links = 0;
        for (VertexId q : pattern.neighbours(v)) {
          if (placed.contains(q)) links += 1;
        }
        std::pair<std::size_t, std::size_t> key{links,
                                                pattern.neighbours(v).size()};
        if (!have || key > best_key) {
          have = true;
          best = v;
          best_key = key;
        }
      }
      order.push_back(best);
      placed.insert(best);
    }
  }

  std::map<VertexId, VertexId> image;  // pattern vertex -> host vertex
  std::set<VertexId> used;
  long long attempts = 0;

  auto admissible = [&](VertexId u, VertexId h) {
    if (used.contains(h)) return false;
    if (host.neighbours(h).size() < pattern.neighbours(u).size()) return false;
    for (VertexId q : pattern.neighbours(u)) {
      auto it = image.find(q);
      if (it != image.end() && !host.has_edge(h, it->second)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    VertexId u = order[i];
    // Iterate a placed neighbour's host adjacency when one exists.
    const VertexSet* candidates = &host.vertices();
    for (VertexId q : pattern.neighbours(u)) {
      auto it = image.find(q);
      if (it != image.end()) {
        candidates = &host.neighbours(it->second);
        break;
      }
    }
    for (VertexId h : *candidates) {
      if (++attempts > kEmbedBudget) return false;
      if (!admissible(u, h)) continue;
      image[u] = h;
      used.insert(h);
      if (place(i + 1)) return true;
      image.erase(u);
      used.erase(h);
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  MinorMap model;
  model.host = host;
  model.pattern = pattern;
  for (const auto& [u, h] : image) {
    model.carrier.insert(h);
    model.assignment[h] = u;
  }
  return model;
}

struct Searcher {
  // Host, in bitmask form over a branch order chosen up front.
  std::vector<VertexId> slot_vertex;     // branch position -> host vertex
  std::vector<std::uint64_t> adj;        // adjacency mask per position
  std::vector<std::uint64_t> suffix;     // suffix[i] = bits of positions >= i
  int n = 0;

  // Pattern, classes 0..p-1 in pattern-vertex order.
  std::vector<VertexId> class_vertex;
  std::vector<std::pair<int, int>> pattern_edges;  // class index pairs
  std::vector<std::vector<int>> class_nbrs;        // pattern neighbours
  std::vector<int> chain_pred;  // symmetry: class openable once pred non-empty
  int p = 0;

  std::vector<std::uint64_t> cls;  // current branch-set masks
  long long nodes = 0;

  std::uint64_t neighbourhood(std::uint64_t mask) const {
    std::uint64_t result = 0;
    while (mask) {
      int i = std::countr_zero(mask);
      mask &= mask - 1;
      result |= adj[i];
    }
    return result;
  }

  bool connected_within(std::uint64_t seed, std::uint64_t region) const {
    if (!seed) return true;
    if (seed & ~region) return false;
    std::uint64_t reached = seed & (~seed + 1);  // lowest seed bit
    for (;;) {
      std::uint64_t grown = (reached | neighbourhood(reached)) & region;
      if (grown == reached) break;
      reached = grown;
    }
    return (seed & ~reached) == 0;
  }

  bool edge_covered(int c, int d) const {
    return (neighbourhood(cls[c]) & cls[d]) != 0;
  }

  // A class already filling its role: non-empty, connected on its own,
  // every incident pattern edge realized. Adding to it is never necessary.
  bool satisfied(int c) const {
    if (!cls[c]) return false;
    if (!connected_within(cls[c], cls[c])) return false;
    for (int d : class_nbrs[c]) {
      if (!edge_covered(c, d)) return false;
    }
    return true;
  }

  bool prune(int pos) {
    std::uint64_t remain = pos < n ? suffix[pos] : 0;

    int empty_classes = 0;
    for (int c = 0; c < p; ++c) {
      if (!cls[c]) {
        empty_classes += 1;
        continue;
      }
      // The class must still be able to connect up through free vertices.
      if (!connected_within(cls[c], cls[c] | remain)) return true;
    }
    if (empty_classes > std::popcount(remain)) return true;

    // Every unrealized pattern edge needs a host edge between the grown
    // regions of its two classes.
    for (auto [c, d] : pattern_edges) {
      if (cls[c] && cls[d] && edge_covered(c, d)) continue;
      if ((neighbourhood(cls[c] | remain) & (cls[d] | remain)) == 0) {
        return true;
      }
    }

    // An empty class must fit inside a single free component adjacent to
    // all its already-started pattern neighbours.
    if (remain) {
      std::vector<std::uint64_t> components;
      std::uint64_t left = remain;
      while (left) {
        std::uint64_t seed = std::uint64_t{1} << std::countr_zero(left);
        std::uint64_t comp = seed;
        for (;;) {
          std::uint64_t grown = (comp | neighbourhood(comp)) & remain;
          if (grown == comp) break;
          comp = grown;
        }
        components.push_back(comp);
        left &= ~comp;
      }
      for (int c = 0; c < p; ++c) {
        if (cls[c]) continue;
        bool placeable = false;
        for (std::uint64_t comp : components) {
          bool fits = true;
          for (int d : class_nbrs[c]) {
            if (!cls[d]) continue;
            if ((neighbourhood(comp) & cls[d]) == 0) {
              fits = false;
              break;
            }
          }
          if (fits) {
            placeable = true;
            break;
          }
        }
        if (!placeable) return true;
      }
    }
    return false;
  }

  bool complete() const {
    for (int c = 0; c < p; ++c) {
      if (!cls[c]) return false;
      if (!connected_within(cls[c], cls[c])) return false;
    }
    for (auto [c, d] : pattern_edges) {
      if (!edge_covered(c, d)) return false;
    }
    return true;
  }

  bool search(int pos) {
    nodes += 1;
    if (nodes > kNodeBudget) {
      throw ResourceError("minor search exceeded its node budget");
    }
    // A model can be complete before every slot is decided; the rest is
    // then implicitly discarded.
    if (complete()) return true;
    if (pos == n) return false;
    if (prune(pos)) return false;

    std::uint64_t bit = std::uint64_t{1} << pos;
    for (int c = 0; c < p; ++c) {
      if (!cls[c]) {
        // Symmetry: interchangeable classes open in chain order.
        if (chain_pred[c] >= 0 && !cls[chain_pred[c]]) continue;
      } else if (satisfied(c)) {
        continue;
      }
      cls[c] |= bit;
      if (search(pos + 1)) return true;
      cls[c] &= ~bit;
    }
    return search(pos + 1);  // discard
  }
};

}  // namespace

std::optional<MinorMap> find_minor(const Graph& host, const Graph& pattern) {
  int p = static_cast<int>(pattern.vertex_count());
  if (p < 2 || p > kMinorMaxPatternVertices) {
    throw InputError("pattern must have between 2 and " +
                     std::to_string(kMinorMaxPatternVertices) + " vertices");
  }
  if (!is_connected(pattern)) {
    throw InputError("pattern must be connected");
  }
  if (host.vertex_count() > static_cast<std::size_t>(kMinorMaxHostVertices)) {
    throw ResourceError("host limited to " +
                        std::to_string(kMinorMaxHostVertices) + " vertices");
  }
  if (host.vertex_count() < pattern.vertex_count() ||
      host.edge_count() < pattern.edge_count()) {
    return std::nullopt;
  }

  if (auto direct = embed_as_subgraph(host, pattern)) return direct;

  Searcher s;
  s.n = static_cast<int>(host.vertex_count());
  s.p = p;

  // High-degree host vertices first: they constrain the search most.
  s.slot_vertex.assign(host.vertices().begin(), host.vertices().end());
  std::sort(s.slot_vertex.begin(), s.slot_vertex.end(),
            [&](VertexId a, VertexId b) {
              auto key = [&](VertexId v) {
                return std::pair(-static_cast<int>(host.neighbours(v).size()),
                                 v.value);
              };
              return key(a) < key(b);
            });
  std::map<VertexId, int> slot_of;
  for (int i = 0; i < s.n; ++i) slot_of[s.slot_vertex[i]] = i;
  s.adj.assign(s.n, 0);
  for (const Edge& e : host.edges()) {
    int a = slot_of[e.a];
    int b = slot_of[e.b];
    s.adj[a] |= std::uint64_t{1} << b;
    s.adj[b] |= std::uint64_t{1} << a;
  }
  s.suffix.assign(s.n, 0);
  for (int i = s.n - 1; i >= 0; --i) {
    s.suffix[i] = (std::uint64_t{1} << i) |
                  (i + 1 < s.n ? s.suffix[i + 1] : 0);
  }

  s.class_vertex.assign(pattern.vertices().begin(), pattern.vertices().end());
  std::map<VertexId, int> class_of;
  for (int c = 0; c < p; ++c) class_of[s.class_vertex[c]] = c;
  s.class_nbrs.assign(p, {});
  for (const Edge& e : pattern.edges()) {
    int c = class_of[e.a];
    int d = class_of[e.b];
    s.pattern_edges.emplace_back(c, d);
    s.class_nbrs[c].push_back(d);
    s.class_nbrs[d].push_back(c);
  }

  // Classes whose transposition is a pattern automorphism are
  // interchangeable; chain each such group so it fills left to right.
  auto transposable = [&](int c, int d) {
    VertexId vc = s.class_vertex[c];
    VertexId vd = s.class_vertex[d];
    for (int k = 0; k < p; ++k) {
      if (k == c || k == d) continue;
      VertexId vk = s.class_vertex[k];
      if (pattern.has_edge(vc, vk) != pattern.has_edge(vd, vk)) return false;
    }
    return true;
  };
  std::vector<int> group(p);
  for (int c = 0; c < p; ++c) group[c] = c;
  for (int c = 0; c < p; ++c) {
    for (int d = c + 1; d < p; ++d) {
      if (transposable(c, d)) {
        int gc = group[c];
        int gd = group[d];
        if (gc != gd) {
          for (int k = 0; k < p; ++k) {
            if (group[k] == gd) group[k] = gc;
          }
        }
      }
    }
  }
  s.chain_pred.assign(p, -1);
  std::map<int, int> last_in_group;
  for (int c = 0; c < p; ++c) {
    auto it = last_in_group.find(group[c]);
    if (it != last_in_group.end()) s.chain_pred[c] = it->second;
    last_in_group[group[c]] = c;
  }

  s.cls.assign(p, 0);
  if (!s.search(0)) return std::nullopt;

  MinorMap model;
  model.host = host;
  model.pattern = pattern;
  for (int c = 0; c < p; ++c) {
    std::uint64_t mask = s.cls[c];
    while (mask) {
      int i = std::countr_zero(mask);
      mask &= mask - 1;
      VertexId v = s.slot_vertex[static_cast<std::size_t>(i)];
      model.carrier.insert(v);
      model.assignment[v] = s.class_vertex[c];
    }
  }
  return model;
}

}  // namespace farey
