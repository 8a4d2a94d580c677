#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/flow.hpp"
#include "farey/graph.hpp"
#include "farey/graph_ops.hpp"
#include "farey/path.hpp"

using namespace farey;

namespace {

VertexId vid(int v) { return VertexId{v}; }

// Exhaustive oracle: the smallest edge set whose removal disconnects x from
// y. By the max-flow/min-cut identity this equals the largest number of
// pairwise edge-disjoint x-y paths. Exponential, so only for graphs with at
// most a dozen edges.
int brute_force_edge_disjoint(const Graph& g, VertexId x, VertexId y) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  REQUIRE(edges.size() <= 12);
  int best = static_cast<int>(edges.size()) + 1;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    int removed = std::popcount(mask);
    if (removed >= best) continue;
    Graph sub;
    for (VertexId v : g.vertices()) sub.add_vertex(v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(mask & (1u << i))) sub.add_edge(edges[i].a, edges[i].b);
    }
    std::vector<VertexId> queue{x};
    std::set<VertexId> seen{x};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (VertexId w : sub.neighbours(queue[q])) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    if (!seen.contains(y)) best = removed;
  }
  return best;
}

// Exhaustive oracle for the smallest vertex set (avoiding u and v) whose
// removal separates u from v.
std::size_t brute_force_separator_size(const Graph& g, VertexId u, VertexId v) {
  std::vector<VertexId> others;
  for (VertexId w : g.vertices()) {
    if (!(w == u) && !(w == v)) others.push_back(w);
  }
  REQUIRE(others.size() <= 16);
  std::size_t best = others.size() + 1;
  for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
    Graph sub = g;
    std::size_t removed = 0;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1u << i)) {
        sub.remove_vertex(others[i]);
        removed += 1;
      }
    }
    if (removed >= best) continue;
    // Connectivity u -> v in sub.
    std::vector<VertexId> queue{u};
    std::set<VertexId> seen{u};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (VertexId w : sub.neighbours(queue[q])) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    if (!seen.contains(v)) best = removed;
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, int extra_edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vid(i));
  // A random spanning tree keeps things connected.
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> earlier(0, i - 1);
    g.add_edge(vid(i), vid(earlier(rng)));
  }
  int added = 0;
  int guard = 0;
  while (added < extra_edges && guard < 100) {
    guard += 1;
    int a = pick(rng);
    int b = pick(rng);
    if (a == b || g.has_edge(vid(a), vid(b))) continue;
    g.add_edge(vid(a), vid(b));
    added += 1;
  }
  return g;
}

void check_decomposition(const Graph& g, VertexId x, VertexId y,
                         const EdgeDisjointPaths& flow) {
  CHECK(static_cast<int>(flow.paths.size()) == flow.count);
  std::set<Edge> used;
  for (const Path& p : flow.paths) {
    CHECK(p.front() == x);
    CHECK(p.back() == y);
    CHECK(p.lies_in(g));
    for (const Edge& e : p.edges()) CHECK(used.insert(e).second);
  }
}

}  // namespace

TEST_CASE("edge-disjoint path count matches the exhaustive oracle") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 40; ++round) {
    int n = 4 + static_cast<int>(rng() % 3);  // 4..6 vertices
    int extra = static_cast<int>(rng() % (13 - n));
    Graph g = random_graph(rng, n, extra);
    if (g.edges().size() > 12) continue;
    EdgeDisjointPaths flow = max_edge_disjoint_paths(g, vid(0), vid(1));
    CHECK(flow.count == brute_force_edge_disjoint(g, vid(0), vid(1)));
    check_decomposition(g, vid(0), vid(1), flow);
  }
}

TEST_CASE("flow on tiny named graphs") {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(vid(i));
  g.add_edge(vid(0), vid(2));
  g.add_edge(vid(2), vid(1));
  g.add_edge(vid(0), vid(3));
  g.add_edge(vid(3), vid(1));
  EdgeDisjointPaths flow = max_edge_disjoint_paths(g, vid(0), vid(1));
  CHECK(flow.count == 2);
  check_decomposition(g, vid(0), vid(1), flow);

  g.add_edge(vid(0), vid(1));
  flow = max_edge_disjoint_paths(g, vid(0), vid(1));
  CHECK(flow.count == 3);

  Graph disconnected;
  disconnected.add_vertex(vid(0));
  disconnected.add_vertex(vid(1));
  flow = max_edge_disjoint_paths(disconnected, vid(0), vid(1));
  CHECK(flow.count == 0);
  CHECK(flow.paths.empty());
}

TEST_CASE("separator size matches the exhaustive oracle and cuts the graph") {
  std::mt19937_64 rng(43);
  int tested = 0;
  for (int round = 0; round < 60 && tested < 25; ++round) {
    int n = 5 + static_cast<int>(rng() % 3);  // 5..7 vertices
    Graph g = random_graph(rng, n, 3 + static_cast<int>(rng() % 3));
    // The tree construction always joins vertex 1 straight to vertex 0, so
    // use the far end as the second terminal and skip the adjacent cases.
    VertexId far = vid(n - 1);
    if (g.has_edge(vid(0), far)) continue;  // separators need non-adjacency
    tested += 1;
    VertexSet cut = min_vertex_separator(g, vid(0), far);
    CHECK(cut.size() == brute_force_separator_size(g, vid(0), far));
    Graph sub = g;
    for (VertexId w : cut) sub.remove_vertex(w);
    std::vector<VertexId> queue{vid(0)};
    std::set<VertexId> seen{vid(0)};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (VertexId w : sub.neighbours(queue[q])) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    CHECK(!seen.contains(far));
  }
  CHECK(tested >= 10);
}

TEST_CASE("separator demands distinct non-adjacent endpoints") {
  Graph g;
  g.add_vertex(vid(0));
  g.add_vertex(vid(1));
  g.add_edge(vid(0), vid(1));
  CHECK_THROWS_AS(min_vertex_separator(g, vid(0), vid(1)), InputError);
  CHECK_THROWS_AS(min_vertex_separator(g, vid(0), vid(0)), InputError);
}

TEST_CASE("halved graphs minus the root edge have flow equal to their order") {
  for (int n = 1; n <= 6; ++n) {
    Graph g = without_edge(build_halved_farey(n).graph, vid(0), vid(1));
    EdgeDisjointPaths flow = max_edge_disjoint_paths(g, vid(0), vid(1));
    CHECK(flow.count == n);
    check_decomposition(g, vid(0), vid(1), flow);
    VertexSet cut = min_vertex_separator(g, vid(0), vid(1));
    CHECK(cut == VertexSet{*g.vertex_with_label(Fraction(1, 1))});
  }
}
