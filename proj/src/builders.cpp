#include "farey/builders.hpp"

#include <string>
#include <utility>

#include "farey/errors.hpp"
#include "farey/graph_ops.hpp"

namespace farey {
namespace {

constexpr int kMaxOrder = 16;

// Mediant arithmetic runs on raw numerator/denominator pairs: the second
// half of the full truncation grows from (0, 1), (-1, 0), whose mediants
// have negative entries that the canonical form would erase mid-build.
struct RawFrac {
  long long num;
  long long den;
};

RawFrac raw_mediant(const RawFrac& a, const RawFrac& b) {
  return {a.num + b.num, a.den + b.den};
}

Fraction canonical(const RawFrac& r) { return Fraction(r.num, r.den); }

struct HalvedConfig {
  RawFrac root_a{0, 1};
  RawFrac root_b{1, 0};
  VertexId id_a{0};
  VertexId id_b{1};
  int first_interior = 2;
};

HalvedFarey build_halved(int order, const HalvedConfig& config) {
  if (order < 0 || order > kMaxOrder) {
    throw InputError("order must be between 0 and " +
                     std::to_string(kMaxOrder));
  }
  HalvedFarey result;
  Graph& g = result.graph;

  g.add_vertex(config.id_a);
  g.add_vertex(config.id_b);
  g.set_label(config.id_a, canonical(config.root_a));
  g.set_label(config.id_b, canonical(config.root_b));
  g.add_edge(config.id_a, config.id_b);

  std::vector<std::pair<VertexId, RawFrac>> sweep{
      {config.id_a, config.root_a}, {config.id_b, config.root_b}};
  auto sweep_ids = [&]() {
    std::vector<VertexId> ids;
    ids.reserve(sweep.size());
    for (const auto& [v, raw] : sweep) {
      (void)raw;
      ids.push_back(v);
    }
    return Path(std::move(ids));
  };
  result.stage_paths.push_back(sweep_ids());

  int next = config.first_interior;
  for (int stage = 1; stage <= order; ++stage) {
    std::vector<std::pair<VertexId, RawFrac>> grown;
    grown.reserve(2 * sweep.size() - 1);
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
      VertexId fresh{next};
      next += 1;
      RawFrac m = raw_mediant(sweep[i].second, sweep[i + 1].second);
      g.add_vertex(fresh);
      g.set_label(fresh, canonical(m));
      g.add_edge(sweep[i].first, fresh);
      g.add_edge(fresh, sweep[i + 1].first);
      grown.push_back(sweep[i]);
      grown.emplace_back(fresh, m);
    }
    grown.push_back(sweep.back());
    sweep = std::move(grown);
    result.stage_paths.push_back(sweep_ids());
  }

  for (const Edge& e : g.edges()) g.set_colour(e.a, e.b, EdgeColour::black);
  const Path& final_stage = result.stage_paths.back();
  for (const Edge& e : final_stage.edges()) {
    g.set_colour(e.a, e.b, EdgeColour::blue);
  }
  return result;
}

}  // namespace

HalvedFarey build_halved_farey(int order) {
  return build_halved(order, HalvedConfig{});
}

Graph build_farey(int order) {
  HalvedConfig positive;
  HalvedFarey a = build_halved(order, positive);

  HalvedConfig negative;
  negative.root_b = RawFrac{-1, 0};
  negative.first_interior = static_cast<int>(a.graph.vertex_count());
  HalvedFarey b = build_halved(order, negative);

  return graph_union(a.graph, b.graph);
}

Graph build_determinant_graph(const std::set<Fraction>& values) {
  Graph g;
  std::vector<Fraction> ordered(values.begin(), values.end());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    VertexId v{static_cast<int>(i)};
    g.add_vertex(v);
    g.set_label(v, ordered[i]);
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      if (farey_determinant(ordered[i], ordered[j]) == 1) {
        g.add_edge(VertexId{static_cast<int>(i)}, VertexId{static_cast<int>(j)});
      }
    }
  }
  return g;
}

Graph build_k23_with_farey_edges(int order) {
  Graph gadget;
  const Fraction zero(0, 1);
  const Fraction inf = Fraction::infinity();
  for (int i = 0; i < 5; ++i) {
    gadget.add_vertex(VertexId{i});
    gadget.set_label(VertexId{i}, i < 2 ? zero : inf);
  }
  int next = 5;
  for (int a_hub = 0; a_hub < 2; ++a_hub) {
    for (int b_hub = 2; b_hub < 5; ++b_hub) {
      Graph copy = build_farey(order);
      std::map<VertexId, VertexId> to;
      to[VertexId{0}] = VertexId{a_hub};
      to[VertexId{1}] = VertexId{b_hub};
      for (VertexId v : copy.vertices()) {
        if (v.value < 2) continue;
        to[v] = VertexId{next};
        next += 1;
      }
      for (VertexId v : copy.vertices()) {
        VertexId w = to[v];
        gadget.add_vertex(w);
        if (v.value >= 2 && copy.has_label(v)) {
          gadget.set_label(w, copy.label(v));
        }
      }
      for (const Edge& e : copy.edges()) {
        gadget.add_edge(to[e.a], to[e.b]);
      }
    }
  }
  return gadget;
}

std::vector<std::vector<Fraction>> canonical_label_paths(const Fraction& a,
                                                         const Fraction& b,
                                                         int count) {
  if (count < 0) {
    throw InputError("row count must be non-negative");
  }
  if (!farey_adjacent(a, b)) {
    throw InputError("canonical rows need adjacent endpoints, got " + a.str() +
                     " and " + b.str());
  }
  std::vector<std::vector<Fraction>> rows;
  std::vector<Fraction> current{a, b};
  for (int j = 1; j <= count; ++j) {
    std::vector<Fraction> grown;
    grown.reserve(2 * current.size() - 1);
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      grown.push_back(current[i]);
      grown.push_back(mediant(current[i], current[i + 1]));
    }
    grown.push_back(current.back());
    current = std::move(grown);
    rows.push_back(current);
  }
  return rows;
}

std::vector<Path> canonical_paths(const Graph& g, VertexId u, VertexId v,
                                  int count) {
  if (!g.has_label(u) || !g.has_label(v)) {
    throw InputError("canonical paths need labelled endpoints");
  }
  auto rows = canonical_label_paths(g.label(u), g.label(v), count);
  std::vector<Path> paths;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    std::vector<VertexId> ids;
    ids.reserve(rows[j].size());
    for (const Fraction& f : rows[j]) {
      auto w = g.vertex_with_label(f);
      if (!w) {
        throw SupplyError("canonical row " + std::to_string(j + 1) +
                          " needs a vertex labelled " + f.str());
      }
      ids.push_back(*w);
    }
    paths.emplace_back(std::move(ids));
  }
  return paths;
}

}  // namespace farey
