#include "farey/flow.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "farey/errors.hpp"

namespace farey {
namespace {

// Arcs come in xor pairs: arc i and i^1 are mutual reverses, and pushing a
// unit over i is cap[i]--, cap[i^1]++.
struct FlowNet {
  int nodes = 0;
  std::vector<int> head;              // arc target
  std::vector<long long> cap;         // residual capacity
  std::vector<std::vector<int>> out;  // arcs leaving each node, in creation order

  void add_pair(int from, int to, long long forward, long long backward) {
    out[from].push_back(static_cast<int>(head.size()));
    head.push_back(to);
    cap.push_back(forward);
    out[to].push_back(static_cast<int>(head.size()));
    head.push_back(from);
    cap.push_back(backward);
  }

  // One shortest augmenting path (unit push); true when one was found.
  bool augment(int source, int sink) {
    std::vector<int> via(nodes, -1);  // arc that reached the node
    std::vector<int> queue{source};
    std::vector<char> seen(nodes, 0);
    seen[source] = 1;
    for (std::size_t head_pos = 0; head_pos < queue.size(); ++head_pos) {
      int n = queue[head_pos];
      for (int arc : out[n]) {
        if (cap[arc] <= 0) continue;
        int to = head[arc];
        if (seen[to]) continue;
        seen[to] = 1;
        via[to] = arc;
        if (to == sink) {
          for (int a = via[sink]; a != -1;) {
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            int from = head[a ^ 1];
            a = via[from];
          }
          return true;
        }
        queue.push_back(to);
      }
    }
    return false;
  }
};

}  // namespace

EdgeDisjointPaths max_edge_disjoint_paths(const Graph& g, VertexId x,
                                          VertexId y) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) {
    throw InputError("path endpoints must exist");
  }
  if (x == y) {
    throw InputError("path endpoints must differ");
  }

  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  FlowNet net;
  net.nodes = static_cast<int>(ids.size());
  net.out.resize(net.nodes);
  for (const Edge& e : g.edges()) {
    net.add_pair(index[e.a], index[e.b], 1, 1);  // undirected unit edge
  }

  int source = index[x];
  int sink = index[y];
  EdgeDisjointPaths result;
  while (net.augment(source, sink)) result.count += 1;

  // Net flow per arc; both directions of an edge can never carry flow at
  // once (they would have cancelled), so positive-flow arcs form a digraph
  // in which every x-y extraction below is edge-disjoint from the others.
  std::vector<int> flow(net.head.size(), 0);
  for (std::size_t i = 0; i < net.head.size(); ++i) {
    flow[i] = static_cast<int>(std::max<long long>(0, 1 - net.cap[i]));
  }

  for (int extracted = 0; extracted < result.count; ++extracted) {
    std::vector<int> via(net.nodes, -1);
    std::vector<int> queue{source};
    std::vector<char> seen(net.nodes, 0);
    seen[source] = 1;
    bool reached = false;
    for (std::size_t head_pos = 0; head_pos < queue.size() && !reached;
         ++head_pos) {
      int n = queue[head_pos];
      for (int arc : net.out[n]) {
        if (!flow[arc]) continue;
        int to = net.head[arc];
        if (seen[to]) continue;
        seen[to] = 1;
        via[to] = arc;
        if (to == sink) {
          reached = true;
          break;
        }
        queue.push_back(to);
      }
    }
    if (!reached) {
      throw Error("internal: flow decomposition lost a path");
    }
    std::vector<VertexId> vertices;
    for (int n = sink; n != -1;) {
      vertices.push_back(ids[static_cast<std::size_t>(n)]);
      int arc = via[n];
      if (arc == -1) break;
      flow[arc] = 0;
      n = net.head[arc ^ 1];
    }
    std::reverse(vertices.begin(), vertices.end());
    result.paths.emplace_back(std::move(vertices));
  }
  return result;
}

VertexSet min_vertex_separator(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw InputError("separator endpoints must exist");
  }
  if (u == v) {
    throw InputError("separator endpoints must differ");
  }
  if (g.has_edge(u, v)) {
    throw InputError("no vertex set separates adjacent vertices");
  }

  constexpr long long kInf = 1'000'000;
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  // Vertex splitting: node 2i is the in-copy, 2i+1 the out-copy.
  FlowNet net;
  net.nodes = 2 * static_cast<int>(ids.size());
  net.out.resize(net.nodes);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    long long through = (ids[i] == u || ids[i] == v) ? kInf : 1;
    net.add_pair(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1, through, 0);
  }
  for (const Edge& e : g.edges()) {
    int a = index[e.a];
    int b = index[e.b];
    net.add_pair(2 * a + 1, 2 * b, kInf, 0);
    net.add_pair(2 * b + 1, 2 * a, kInf, 0);
  }

  int source = 2 * index[u] + 1;  // u's out-copy
  int sink = 2 * index[v];        // v's in-copy
  while (net.augment(source, sink)) {
  }

  // Residual reachability from the source; a vertex is in the canonical cut
  // when its in-copy is reachable but its out-copy is not. This set is the
  // same for every maximum flow.
  std::vector<char> seen(net.nodes, 0);
  std::vector<int> queue{source};
  seen[source] = 1;
  for (std::size_t head_pos = 0; head_pos < queue.size(); ++head_pos) {
    int n = queue[head_pos];
    for (int arc : net.out[n]) {
      if (net.cap[arc] <= 0) continue;
      int to = net.head[arc];
      if (!seen[to]) {
        seen[to] = 1;
        queue.push_back(to);
      }
    }
  }

  VertexSet separator;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == u || ids[i] == v) continue;
    if (seen[2 * i] && !seen[2 * i + 1]) separator.insert(ids[i]);
  }
  return separator;
}

}  // namespace farey
