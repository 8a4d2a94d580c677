#include "farey/minor_map.hpp"

#include <string>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/graph_ops.hpp"
#include "farey/isomorphism.hpp"

namespace farey {

MinorMap MinorMap::identity(const Graph& g) {
  MinorMap m;
  m.host = g;
  m.pattern = g;
  m.carrier = g.vertices();
  for (VertexId v : g.vertices()) m.assignment[v] = v;
  return m;
}

VertexSet MinorMap::fibre(VertexId pattern_vertex) const {
  VertexSet result;
  for (const auto& [v, w] : assignment) {
    if (w == pattern_vertex) result.insert(v);
  }
  return result;
}

MinorMapReport validate(const MinorMap& m) {
  MinorMapReport report;
  auto fail = [&](const std::string& message) {
    report.pass = false;
    report.issues.push_back(message);
  };

  for (VertexId v : m.carrier) {
    if (!m.host.has_vertex(v)) {
      fail("carrier vertex " + std::to_string(v.value) + " not in host");
    }
  }
  for (VertexId v : m.carrier) {
    if (!m.assignment.contains(v)) {
      fail("carrier vertex " + std::to_string(v.value) + " unassigned");
    }
  }
  for (const auto& [v, w] : m.assignment) {
    if (!m.carrier.contains(v)) {
      fail("assigned vertex " + std::to_string(v.value) + " not in carrier");
    }
    if (!m.pattern.has_vertex(w)) {
      fail("assignment target " + std::to_string(w.value) +
           " not in pattern");
    }
  }
  if (!report.pass) return report;

  std::map<VertexId, VertexSet> fibres;
  for (const auto& [v, w] : m.assignment) fibres[w].insert(v);
  for (VertexId w : m.pattern.vertices()) {
    auto it = fibres.find(w);
    if (it == fibres.end() || it->second.empty()) {
      fail("branch set empty for pattern vertex " + std::to_string(w.value));
      continue;
    }
    if (!is_connected_in(m.host, it->second)) {
      fail("branch set not connected for pattern vertex " +
           std::to_string(w.value));
    }
  }
  for (const Edge& e : m.pattern.edges()) {
    bool realized = false;
    for (VertexId a : fibres[e.a]) {
      for (VertexId b : fibres[e.b]) {
        if (m.host.has_edge(a, b)) {
          realized = true;
          break;
        }
      }
      if (realized) break;
    }
    if (!realized) {
      fail("pattern edge " + std::to_string(e.a.value) + "-" +
           std::to_string(e.b.value) + " not realized by a host edge");
    }
  }
  return report;
}

MinorMap compose(const MinorMap& phi, const MinorMap& psi) {
  if (!(phi.pattern == psi.host)) {
    throw InputError("composition mismatch: first pattern differs from second host");
  }
  if (!validate(phi).pass || !validate(psi).pass) {
    throw InputError("cannot compose invalid minor models");
  }
  MinorMap result;
  result.host = phi.host;
  result.pattern = psi.pattern;
  for (const auto& [v, w] : phi.assignment) {
    auto it = psi.assignment.find(w);
    if (it == psi.assignment.end()) continue;  // w deleted by psi
    result.carrier.insert(v);
    result.assignment[v] = it->second;
  }
  return result;
}

MinorMap restrict_pattern(const MinorMap& m, const VertexSet& keep) {
  MinorMap result;
  result.host = m.host;
  result.pattern = induced_subgraph(m.pattern, keep);
  for (const auto& [v, w] : m.assignment) {
    if (keep.contains(w)) {
      result.carrier.insert(v);
      result.assignment[v] = w;
    }
  }
  return result;
}

WitnessResult halved_contains_full_witness(int order) {
  if (order < 1) {
    throw InputError("the witness needs order at least 1");
  }
  HalvedFarey halved = build_halved_farey(order);
  VertexSet roots{VertexId{0}, VertexId{1}};
  Contraction merged = contract_set(halved.graph, roots);

  Graph target = build_farey(order - 1);
  auto iso = iso_check(merged.graph, target);
  if (!iso) {
    throw Error("witness construction failed: merged halved graph is not a "
                "copy of the smaller full graph");
  }

  MinorMap to_target;
  to_target.host = merged.graph;
  to_target.pattern = target;
  to_target.carrier = merged.graph.vertices();
  to_target.assignment = *iso;

  WitnessResult result;
  result.map = compose(merged.map, to_target);
  result.offset = order - 1;
  return result;
}

}  // namespace farey
