#include "farey/graph_ops.hpp"

#include <deque>

#include "farey/errors.hpp"

namespace farey {

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Graph result;
  for (VertexId v : keep) {
    if (!g.has_vertex(v)) {
      throw InputError("induced subgraph over a missing vertex " +
                       std::to_string(v.value));
    }
    result.add_vertex(v);
    if (g.has_label(v)) result.set_label(v, g.label(v));
  }
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.a) && keep.contains(e.b)) {
      result.add_edge(e.a, e.b);
      if (auto c = g.colour(e.a, e.b)) result.set_colour(e.a, e.b, *c);
    }
  }
  return result;
}

bool is_connected_in(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  for (VertexId v : within) {
    if (!g.has_vertex(v)) return false;
  }
  VertexSet seen;
  std::deque<VertexId> queue{*within.begin()};
  seen.insert(*within.begin());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (within.contains(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == within.size();
}

bool is_connected(const Graph& g) { return is_connected_in(g, g.vertices()); }

Contraction contract_set(const Graph& g, const VertexSet& x) {
  if (x.empty()) {
    throw ContractionError("cannot contract an empty vertex set");
  }
  for (VertexId v : x) {
    if (!g.has_vertex(v)) {
      throw ContractionError("contraction set contains a missing vertex " +
                             std::to_string(v.value));
    }
  }
  if (!is_connected_in(g, x)) {
    throw ContractionError("contraction set is not connected");
  }

  Contraction result;
  result.merged = g.fresh_id();
  Graph& h = result.graph;
  for (VertexId v : g.vertices()) {
    if (x.contains(v)) continue;
    h.add_vertex(v);
    if (g.has_label(v)) h.set_label(v, g.label(v));
  }
  h.add_vertex(result.merged);
  for (const Edge& e : g.edges()) {
    bool a_in = x.contains(e.a);
    bool b_in = x.contains(e.b);
    if (a_in && b_in) continue;
    VertexId a = a_in ? result.merged : e.a;
    VertexId b = b_in ? result.merged : e.b;
    h.add_edge(a, b);
  }

  result.map.host = g;
  result.map.pattern = h;
  result.map.carrier = g.vertices();
  for (VertexId v : g.vertices()) {
    result.map.assignment[v] = x.contains(v) ? result.merged : v;
  }
  return result;
}

Subdivision subdivide_edges(const Graph& g) {
  Subdivision result;
  Graph& h = result.graph;
  for (VertexId v : g.vertices()) {
    h.add_vertex(v);
    if (g.has_label(v)) h.set_label(v, g.label(v));
  }
  VertexId next = g.fresh_id();
  for (const Edge& e : g.edges()) {
    VertexId mid = next;
    next = VertexId{next.value + 1};
    h.add_vertex(mid);
    h.add_edge(e.a, mid);
    h.add_edge(mid, e.b);
    result.midpoints[e] = mid;
  }
  return result;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph result;
  for (const Graph* g : {&a, &b}) {
    for (VertexId v : g->vertices()) {
      result.add_vertex(v);
      if (g->has_label(v)) {
        if (result.has_label(v) && result.label(v) != g->label(v)) {
          throw InputError("union label conflict at vertex " +
                           std::to_string(v.value) + ": " +
                           result.label(v).str() + " vs " + g->label(v).str());
        }
        result.set_label(v, g->label(v));
      }
    }
    for (const Edge& e : g->edges()) result.add_edge(e.a, e.b);
  }
  return result;
}

Graph without_edge(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) {
    throw InputError("no edge " + std::to_string(u.value) + "-" +
                     std::to_string(v.value) + " to remove");
  }
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

Graph renamed(const Graph& g, VertexId from, VertexId to) {
  if (from == to) return g;
  if (!g.has_vertex(from)) {
    throw InputError("cannot rename missing vertex " +
                     std::to_string(from.value));
  }
  if (g.has_vertex(to)) {
    throw InputError("rename target " + std::to_string(to.value) +
                     " already exists");
  }
  Graph h;
  auto map = [&](VertexId v) { return v == from ? to : v; };
  for (VertexId v : g.vertices()) {
    h.add_vertex(map(v));
    if (g.has_label(v)) h.set_label(map(v), g.label(v));
  }
  for (const Edge& e : g.edges()) {
    h.add_edge(map(e.a), map(e.b));
    if (auto c = g.colour(e.a, e.b)) h.set_colour(map(e.a), map(e.b), *c);
  }
  return h;
}

}  // namespace farey
